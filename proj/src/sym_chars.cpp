#include "blockcraft/sym_chars.hpp"

#include <algorithm>
#include <map>

#include "blockcraft/config.hpp"
#include "blockcraft/parallel.hpp"
#include "blockcraft/wreath_local.hpp"

namespace blockcraft {

std::size_t SymCharacterTable::index_of_character(const Partition& lambda) const {
  const auto it = std::find(labels.begin(), labels.end(), lambda);
  if (it == labels.end()) throw ArgumentError("no character " + lambda.str() + " in table of S_" + std::to_string(n));
  return static_cast<std::size_t>(it - labels.begin());
}

std::size_t SymCharacterTable::index_of_class(const Partition& rho) const {
  const auto it = std::find(classes.begin(), classes.end(), rho);
  if (it == classes.end()) throw ArgumentError("no class " + rho.str() + " in table of S_" + std::to_string(n));
  return static_cast<std::size_t>(it - classes.begin());
}

BigInt sym_degree(const Partition& lambda) {
  BigInt hooks = 1;
  for (int h : hook_lengths(lambda).lengths) hooks *= h;
  return exact_div(factorial(static_cast<unsigned long>(lambda.size())), hooks);
}

unsigned sym_degree_valuation(const Partition& lambda, unsigned p) {
  std::uint64_t v = factorial_valuation(static_cast<std::uint64_t>(lambda.size()), p);
  for (int h : hook_lengths(lambda).lengths) v -= valuation(static_cast<std::uint64_t>(h), p);
  return static_cast<unsigned>(v);
}

BigInt irr_pprime_count_sym(int n, unsigned p) {
  if (!is_prime(p)) throw ArgumentError("irr_pprime_count_sym: p must be prime");
  const auto parts = enumerate_partitions(n);
  const auto coprime = parallel_map<char>(parts.size(), [&](std::size_t i) { return sym_degree_valuation(parts[i], p) == 0; });
  return static_cast<unsigned long>(std::count(coprime.begin(), coprime.end(), 1));
}

BigInt macdonald_count(int n) {
  if (n < 1) throw ArgumentError("macdonald_count: n must be >= 1");
  unsigned long exponent = 0;
  for (unsigned k = 0; (n >> k) != 0; ++k)
    if ((n >> k) & 1) exponent += k;
  return big_pow(2, exponent);
}

namespace {

// Degrees of the iterated wreath product C_2 wr C_2 wr ... (k factors);
// k = 0 is the trivial group.
DegreeMultiset iterated_wreath_c2(unsigned k) {
  DegreeMultiset p = trivial_group_degrees();
  for (unsigned i = 0; i < k; ++i) p = wreath_degrees(p, 2);
  return p;
}

}  // namespace

BigInt sylow2_local_count(int n) {
  if (n < 1) throw ArgumentError("sylow2_local_count: n must be >= 1");
  BigInt product = 1;
  for (unsigned k = 0; (n >> k) != 0; ++k)
    if ((n >> k) & 1) product *= irr_lprime_count(iterated_wreath_c2(k), 2);
  return product;
}

BigInt sym_class_size(const Partition& rho) {
  std::map<int, unsigned long> mult;
  for (int part : rho.parts()) ++mult[part];
  BigInt centralizer = 1;
  for (const auto& [part, m] : mult) centralizer *= big_pow(part, m) * factorial(m);
  return exact_div(factorial(static_cast<unsigned long>(rho.size())), centralizer);
}

SymCharacterTable build_table(int n) {
  if (n < 0) throw ArgumentError("build_table: n must be non-negative");
  if (n > limits().table_max_n)
    throw ResourceError("build_table: n = " + std::to_string(n) + " exceeds table bound " + std::to_string(limits().table_max_n));
  SymCharacterTable t;
  t.n = n;
  t.labels = enumerate_partitions(n);
  t.classes = t.labels;
  for (const auto& rho : t.classes) t.class_sizes.push_back(sym_class_size(rho));
  t.values = parallel_map<std::vector<BigInt>>(t.labels.size(), [&](std::size_t i) {
    std::vector<BigInt> row;
    row.reserve(t.classes.size());
    for (const auto& rho : t.classes) row.push_back(mn_character_value(t.labels[i], rho));
    return row;
  });
  return t;
}

bool row_orthogonality_holds(const SymCharacterTable& table) {
  const BigInt order = factorial(static_cast<unsigned long>(table.n));
  const std::size_t rows = table.labels.size();
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = a; b < rows; ++b) {
      BigInt sum = 0;
      for (std::size_t j = 0; j < table.classes.size(); ++j) sum += table.class_sizes[j] * table.values[a][j] * table.values[b][j];
      if (sum != (a == b ? order : BigInt(0))) return false;
    }
  return true;
}

bool column_orthogonality_holds(const SymCharacterTable& table) {
  const BigInt order = factorial(static_cast<unsigned long>(table.n));
  const std::size_t cols = table.classes.size();
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t b = a; b < cols; ++b) {
      BigInt sum = 0;
      for (std::size_t i = 0; i < table.labels.size(); ++i) sum += table.values[i][a] * table.values[i][b];
      if (sum != (a == b ? exact_div(order, table.class_sizes[a]) : BigInt(0))) return false;
    }
  return true;
}

namespace {

bool is_p_regular(const Partition& rho, unsigned p) {
  return std::none_of(rho.parts().begin(), rho.parts().end(), [p](int part) { return part % static_cast<int>(p) == 0; });
}

}  // namespace

BlockPartitionOracle central_character_blocks(const SymCharacterTable& table, unsigned p) {
  if (!is_prime(p)) throw ArgumentError("central_character_blocks: p must be prime");
  const std::size_t identity = table.index_of_class(Partition::column(table.n));
  const BigInt modulus = p;

  // Central character values |x^G| chi(x) / chi(1) are rational integers for S_n.
  const auto residues = parallel_map<std::vector<unsigned long>>(table.labels.size(), [&](std::size_t i) {
    const BigInt& degree = table.values[i][identity];
    std::vector<unsigned long> row;
    for (std::size_t j = 0; j < table.classes.size(); ++j) {
      BigInt omega = exact_div(table.class_sizes[j] * table.values[i][j], degree);
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), omega.get_mpz_t(), modulus.get_mpz_t());
      row.push_back(r.get_ui());
    }
    return row;
  });

  BlockPartitionOracle oracle;
  oracle.n = table.n;
  oracle.p = static_cast<int>(p);
  std::map<std::vector<unsigned long>, std::size_t> block_of_residue;
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    auto [it, inserted] = block_of_residue.emplace(residues[i], oracle.blocks.size());
    if (inserted) oracle.blocks.emplace_back();
    oracle.blocks[it->second].push_back(table.labels[i]);
  }
  return oracle;
}

BlockPartitionOracle central_character_blocks(int n, unsigned p) { return central_character_blocks(build_table(n), p); }

ClassAlgebraElement block_idempotent(const SymCharacterTable& table, const std::vector<Partition>& block, unsigned p) {
  const std::size_t identity = table.index_of_class(Partition::column(table.n));
  const BigInt order = factorial(static_cast<unsigned long>(table.n));
  ClassAlgebraElement e;
  e.coefficients.assign(table.classes.size(), BigRat(0));
  for (std::size_t j = 0; j < table.classes.size(); ++j) {
    if (!is_p_regular(table.classes[j], p)) continue;
    BigInt sum = 0;
    for (const auto& lambda : block) {
      const std::size_t i = table.index_of_character(lambda);
      sum += table.values[i][identity] * table.values[i][j];
    }
    e.coefficients[j] = BigRat(sum, order);
    e.coefficients[j].canonicalize();
  }
  return e;
}

namespace {

// a[i][j][k]: coefficient of class sum k in (class sum i)(class sum j).
std::vector<std::vector<std::vector<BigInt>>> structure_constants(const SymCharacterTable& t) {
  const std::size_t c = t.classes.size();
  const std::size_t identity = t.index_of_class(Partition::column(t.n));
  const BigInt order = factorial(static_cast<unsigned long>(t.n));
  std::vector<std::vector<std::vector<BigInt>>> a(c, std::vector<std::vector<BigInt>>(c, std::vector<BigInt>(c)));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k < c; ++k) {
        BigRat s = 0;
        for (std::size_t x = 0; x < t.labels.size(); ++x)
          s += BigRat(t.values[x][i] * t.values[x][j] * t.values[x][k], t.values[x][identity]);
        s *= BigRat(t.class_sizes[i] * t.class_sizes[j], order);
        s.canonicalize();
        if (s.get_den() != 1) throw VerificationFailure("non-integral class algebra structure constant");
        a[i][j][k] = s.get_num();
      }
  return a;
}

}  // namespace

ClassAlgebraElement class_algebra_multiply(const SymCharacterTable& table, const ClassAlgebraElement& a,
                                          const ClassAlgebraElement& b) {
  const auto constants = structure_constants(table);
  const std::size_t c = table.classes.size();
  ClassAlgebraElement out;
  out.coefficients.assign(c, BigRat(0));
  for (std::size_t i = 0; i < c; ++i) {
    if (a.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < c; ++j) {
      if (b.coefficients[j] == 0) continue;
      const BigRat ab = a.coefficients[i] * b.coefficients[j];
      for (std::size_t k = 0; k < c; ++k)
        if (constants[i][j][k] != 0) out.coefficients[k] += ab * constants[i][j][k];
    }
  }
  for (auto& x : out.coefficients) x.canonicalize();
  return out;
}

bool block_idempotent_p_integral(const SymCharacterTable& table, unsigned p, const std::vector<Partition>& block) {
  if (table.n > limits().idempotent_max_n)
    throw ResourceError("block_idempotent_p_integral: n = " + std::to_string(table.n) + " exceeds bound " +
                        std::to_string(limits().idempotent_max_n));
  const ClassAlgebraElement restricted = block_idempotent(table, block, p);

  // Sum of the primitive central idempotents over every class.
  const std::size_t identity = table.index_of_class(Partition::column(table.n));
  const BigInt order = factorial(static_cast<unsigned long>(table.n));
  for (std::size_t j = 0; j < table.classes.size(); ++j) {
    BigInt sum = 0;
    for (const auto& lambda : block) {
      const std::size_t i = table.index_of_character(lambda);
      sum += table.values[i][identity] * table.values[i][j];
    }
    BigRat full(sum, order);
    full.canonicalize();
    if (full != restricted.coefficients[j]) return false;
  }

  for (const auto& x : restricted.coefficients)
    if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), p)) return false;

  const ClassAlgebraElement square = class_algebra_multiply(table, restricted, restricted);
  return square.coefficients == restricted.coefficients;
}

bool block_idempotent_p_integral(int n, unsigned p, const std::vector<Partition>& block) {
  if (n > limits().idempotent_max_n)
    throw ResourceError("block_idempotent_p_integral: n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits().idempotent_max_n));
  return block_idempotent_p_integral(build_table(n), p, block);
}

}  // namespace blockcraft
