// Acceptance criteria: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "blockcraft/config.hpp"
#include "blockcraft/glq_chars.hpp"
#include "blockcraft/glq_mckay_blocks.hpp"
#include "blockcraft/sym_blocks.hpp"
#include "blockcraft/sym_chars.hpp"
#include "oracles.hpp"

using namespace blockcraft;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = no limit
  std::function<Outcome()> run;
};

std::set<std::set<Partition>> as_sets(const std::vector<std::vector<Partition>>& blocks) {
  std::set<std::set<Partition>> out;
  for (const auto& b : blocks) out.emplace(b.begin(), b.end());
  return out;
}

bool is_prime_small(unsigned p) { return is_prime(p); }

Outcome mckay_p2() {
  Outcome o;
  for (int n = 1; n <= 40; ++n) {
    const BigInt global = irr_pprime_count_sym(n, 2);
    const BigInt closed = macdonald_count(n);
    const BigInt local = sylow2_local_count(n);
    if (global != closed || closed != local) {
      o.ok = false;
      o.detail = "mismatch at n=" + std::to_string(n);
      return o;
    }
  }
  o.detail = "n=1..40, e.g. n=40: " + to_string(irr_pprime_count_sym(40, 2));
  return o;
}

Outcome nakayama() {
  Outcome o;
  int cells = 0;
  for (int n = 1; n <= 8; ++n)
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      ++cells;
      if (as_sets(central_character_blocks(n, p).blocks) != as_sets(nakayama_blocks(n, p))) {
        o.ok = false;
        o.detail = "differs at n=" + std::to_string(n) + " p=" + std::to_string(p);
        return o;
      }
    }
  o.detail = std::to_string(cells) + " (n,p) cells";
  return o;
}

Outcome table_sanity() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    const auto t = build_table(n);
    if (!row_orthogonality_holds(t) || !column_orthogonality_holds(t)) {
      o.ok = false;
      o.detail = "orthogonality fails at n=" + std::to_string(n);
      return o;
    }
  }
  for (int n = 0; n <= 30; ++n) {
    BigInt total = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
      const BigInt d = sym_degree(lambda);
      total += d * d;
    }
    if (total != factorial(static_cast<unsigned long>(n))) {
      o.ok = false;
      o.detail = "sum of squares fails at n=" + std::to_string(n);
      return o;
    }
  }
  o.detail = "orthogonality n<=8, sum of squares n<=30";
  return o;
}

Outcome bhz() {
  Outcome o;
  int blocks = 0;
  for (int n = 2; n <= 20; ++n)
    for (unsigned p = 2; p <= static_cast<unsigned>(n); ++p) {
      if (!is_prime_small(p)) continue;
      for (const auto& label : block_labels(n, p)) {
        ++blocks;
        if (!bhz_verify(label).passed) {
          o.ok = false;
          o.detail = "fails at n=" + std::to_string(n) + " p=" + std::to_string(p) + " core=" + label.core.str();
          return o;
        }
      }
    }
  o.detail = std::to_string(blocks) + " blocks";
  return o;
}

Outcome am() {
  Outcome o;
  int blocks = 0;
  for (int n = 0; n <= 20; ++n)
    for (unsigned p : {3u, 5u, 7u})
      for (const auto& label : block_labels(n, p)) {
        if (label.weight >= static_cast<int>(p)) continue;
        ++blocks;
        const auto r = am_verify_abelian(label);
        if (!r.passed) {
          o.ok = false;
          o.detail = "fails at n=" + std::to_string(n) + " p=" + std::to_string(p) + " core=" + label.core.str();
          return o;
        }
      }
  o.detail = std::to_string(blocks) + " blocks with w < p";
  return o;
}

Outcome gl_completeness() {
  Outcome o;
  std::vector<std::pair<int, std::uint64_t>> cells;
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t q : {2, 3, 4, 5}) cells.emplace_back(n, q);
  cells.emplace_back(5, 2);
  cells.emplace_back(5, 3);
  for (const auto& [n, q] : cells)
    if (all_degrees(n, q).sum_of_squares() != gl_order(n, BigInt(static_cast<unsigned long>(q)))) {
      o.ok = false;
      o.detail = "fails at n=" + std::to_string(n) + " q=" + std::to_string(q);
      return o;
    }
  o.detail = std::to_string(cells.size()) + " (n,q) cells";
  return o;
}

Outcome class_census() {
  Outcome o;
  int cells = 0;
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
      ++cells;
      BigInt total = 0;
      for (const auto& c : enumerate_class_types(n, q)) total += c.classes;
      const BigInt expected = BigInt(static_cast<unsigned long>(q - 1)) * big_pow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(n - 1));
      if (total != expected) {
        o.ok = false;
        o.detail = "fails at n=" + std::to_string(n) + " q=" + std::to_string(q);
        return o;
      }
    }
  o.detail = std::to_string(cells) + " (n,q) cells";
  return o;
}

Outcome ms10() {
  Outcome o;
  int cells = 0;
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t q : {2, 3, 4, 5})
      for (unsigned ell : {2u, 3u, 5u, 7u}) {
        if (q % ell == 0) continue;
        ++cells;
        if (!ms10_verify(n, q, ell).passed) {
          o.ok = false;
          o.detail = "fails at n=" + std::to_string(n) + " q=" + std::to_string(q) + " ell=" + std::to_string(ell);
          return o;
        }
      }
  struct Spot {
    int n;
    std::uint64_t q;
    unsigned ell;
    long count;
  };
  for (const Spot s : {Spot{2, 3, 2, 4}, Spot{2, 2, 3, 3}, Spot{3, 2, 7, 5}}) {
    const auto r = ms10_verify(s.n, s.q, s.ell);
    if (r.global_count != s.count || r.local_count != s.count) {
      o.ok = false;
      o.detail = "spot value wrong at n=" + std::to_string(s.n);
      return o;
    }
  }
  o.detail = std::to_string(cells) + " cells, spot values 4=4, 3=3, 5=5";
  return o;
}

Outcome lprime_criteria() {
  Outcome o;
  long checked = 0, literal_mismatch = 0;
  for (std::uint64_t q : {2, 3, 4, 5})
    for (unsigned ell : {3u, 5u, 7u, 11u, 13u}) {
      if (q % ell == 0) continue;
      const auto ctx = EllContext::make(q, ell);
      for (int n = 0; n <= 20; ++n) {
        const int w = n / ctx.d;
        for (const auto& lambda : enumerate_partitions(n)) {
          ++checked;
          const bool by_valuation = unipotent_lprime_by_valuation(lambda, ctx);
          if (unipotent_lprime_by_hooks(lambda, ctx) != by_valuation) {
            o.ok = false;
            o.detail = "hook criterion differs at " + lambda.str() + " q=" + std::to_string(q) + " ell=" + std::to_string(ell);
            return o;
          }
          if ((count_hooks(lambda, ctx.d) == w) != by_valuation) ++literal_mismatch;
        }
      }
    }
  long labels = 0;
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t q : {2, 3, 4, 5})
      for (unsigned ell : {2u, 3u, 5u, 7u}) {
        if (q % ell == 0) continue;
        const auto ctx = EllContext::make(q, ell);
        for (const auto& [label, mult] : series_labels(n, q)) {
          ++labels;
          // Throws VerificationFailure on disagreement with the degree valuation.
          const bool lprime = series_is_lprime(label, ctx);
          if (lprime != (valuation(green_degree(label, q), ell) == 0)) {
            o.ok = false;
            o.detail = "series criterion differs at n=" + std::to_string(n);
            return o;
          }
        }
      }
  o.detail = std::to_string(checked) + " (lambda,q,ell) triples, " + std::to_string(labels) +
             " series labels; literal 'exactly w hooks of length d' reading disagrees on " + std::to_string(literal_mismatch);
  return o;
}

Outcome unipotent_blocks() {
  Outcome o;
  int contexts = 0;
  long blocks = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (unsigned ell : {7u, 11u, 13u}) {
      if (q % ell == 0) continue;
      const auto ctx = EllContext::make(q, ell);
      if (ctx.d > 6) continue;
      ++contexts;
      for (int n = 0; n <= 25; ++n) {
        std::map<std::pair<Partition, int>, std::pair<BigInt, Partition>> census;
        for (const auto& lambda : enumerate_partitions(n)) {
          const auto label = unipotent_block_of(lambda, ctx);
          // Block label agrees with diagram hook removal.
          const Partition core = ctx.d == 1 ? Partition{} : oracle::core_by_hook_removal(lambda, ctx.d);
          if (label.d_core != core) {
            o.ok = false;
            o.detail = "core differs at " + lambda.str();
            return o;
          }
          auto& entry = census.try_emplace({label.d_core, label.weight}, BigInt(0), lambda).first->second;
          entry.first += 1;
        }
        BigInt covered = 0;
        for (const auto& [key, entry] : census) {
          ++blocks;
          const BigInt& count = entry.first;
          const GlUnipotentBlockLabel label = unipotent_block_of(entry.second, ctx);
          // unipotent_block_series_size cross-checks the census, |Irr(C_d wr S_w)| and the multipartition count.
          const BigInt size = unipotent_block_series_size(label);
          if (size != count || size != multipartition_count(ctx.d, key.second)) {
            o.ok = false;
            o.detail = "block size mismatch at n=" + std::to_string(n) + " core=" + key.first.str();
            return o;
          }
          covered += count;
        }
        if (covered != partition_count(n)) {
          o.ok = false;
          o.detail = "blocks do not cover at n=" + std::to_string(n);
          return o;
        }
      }
    }
  o.detail = std::to_string(contexts) + " contexts, " + std::to_string(blocks) + " blocks";
  return o;
}

Outcome idempotents() {
  Outcome o;
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto table = build_table(n);
    for (unsigned p : {2u, 3u, 5u}) {
      const auto blocks = central_character_blocks(table, p).blocks;
      std::vector<ClassAlgebraElement> es;
      ClassAlgebraElement sum;
      sum.coefficients.assign(table.classes.size(), BigRat(0));
      for (const auto& b : blocks) {
        ++checked;
        if (!block_idempotent_p_integral(table, p, b)) {
          o.ok = false;
          o.detail = "not a p-integral idempotent at n=" + std::to_string(n) + " p=" + std::to_string(p);
          return o;
        }
        es.push_back(block_idempotent(table, b, p));
        for (std::size_t j = 0; j < sum.coefficients.size(); ++j) sum.coefficients[j] += es.back().coefficients[j];
      }
      for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
          for (const auto& c : class_algebra_multiply(table, es[a], es[b]).coefficients)
            if (c != 0) {
              o.ok = false;
              o.detail = "idempotents of distinct blocks not orthogonal at n=" + std::to_string(n);
              return o;
            }
      const std::size_t identity = table.index_of_class(Partition::column(n));
      for (std::size_t j = 0; j < sum.coefficients.size(); ++j)
        if (sum.coefficients[j] != (j == identity ? 1 : 0)) {
          o.ok = false;
          o.detail = "block idempotents do not sum to 1 at n=" + std::to_string(n);
          return o;
        }
    }
  }
  o.detail = std::to_string(checked) + " block idempotents, pairwise orthogonal, summing to 1";
  return o;
}

Outcome witness() {
  Outcome o;
  std::ostringstream found;
  for (int w = 2; w <= 10; ++w) {
    const Partition lambda = bhz_witness_search(w);
    const bool empty_core = oracle::core_by_hook_removal(lambda, 2).empty();
    const bool even = valuation(sym_degree(lambda), 2) > 0;
    if (lambda.size() != 2 * w || !empty_core || !even) {
      o.ok = false;
      o.detail = "bad witness for w=" + std::to_string(w);
      return o;
    }
    if (w <= 3) found << "w=" << w << ": " << lambda.str() << " ";
  }
  o.detail = found.str() + "...; (2w-1,1) has odd degree 2w-1";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "McKay for S_n at p=2 (n<=40)", 60, mckay_p2},
      {2, "Nakayama oracle (n<=8, p in {2,3,5,7})", 300, nakayama},
      {3, "Character table sanity", 0, table_sanity},
      {4, "BHZ for S_n (n<=20, p<=n)", 60, bhz},
      {5, "Alperin-McKay counts, abelian defect", 0, am},
      {6, "GL completeness: sum of squares", 120, gl_completeness},
      {7, "Semisimple class census", 0, class_census},
      {8, "MS10 counts", 120, ms10},
      {9, "ell' criteria equivalence", 0, lprime_criteria},
      {10, "Unipotent block census (ell>=7, d<=6, n<=25)", 0, unipotent_blocks},
      {11, "Block idempotents (n<=6, p in {2,3,5})", 0, idempotents},
      {12, "BHZ witness existence (2<=w<=10)", 0, witness},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && seconds > c.limit_s) {
      o.ok = false;
      o.detail += " (time limit exceeded)";
    }
    all = all && o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << o.detail << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
