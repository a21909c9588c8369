#include "hg/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "hg/error.hpp"
#include "hg/heights.hpp"
#include "hg/structure.hpp"

namespace hg {

std::string csv_num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::string word_string(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::string s;
  for (int l : letters) s += l >= 0 ? char('a' + l) : char('A' + (-l - 1));
  return s;
}

FieldElement random_param(const FieldPtr& K, int H, bool gaussian, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-H, H);
  for (;;) {
    if (!gaussian) {
      int x = coef(rng);
      if (x != 0) return FieldElement::from_rational(K, Rat(x));
    } else {
      int a = coef(rng), b = coef(rng);
      if (a != 0 || b != 0) return FieldElement(K, {Rat(a), Rat(b)});
    }
  }
}

KMatrix elementary(const FieldPtr& K, bool upper, const FieldElement& x) {
  KMatrix m = KMatrix::identity(K, 2);
  m.at(upper ? 0 : 1, upper ? 1 : 0) = x;
  return m;
}

GapScanRow scan_one(const GapScanConfig& cfg, int id) {
  GapScanRow row;
  row.id = id;
  try {
    MatrixSet F = gap_scan_sample(cfg, id);
    QuasiUnipotentResult qu = is_quasi_unipotent(F, 3);
    if (qu.certified_no) row.witness = word_string(qu.witness);
    SpanCertificate span = burnside_span(F);
    if (!qu.certified_no)
      row.proxy = "quasi-unipotent";
    else if (span.dimension < F.d * F.d)
      row.proxy = "reducible";
    else if (projective_invariant_set_d2(F, 4).found)
      row.proxy = "invariant-set";
    else
      row.proxy = "none";
    row.hhat = normalized_height_bounds(F, cfg.n_max, cfg.budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::BudgetExceededNoUpper) {
      row.truncated = true;
    } else {
      row.failed = true;
      row.error = e.what();
    }
  }
  return row;
}

}  // namespace

MatrixSet gap_scan_sample(const GapScanConfig& cfg, int id) {
  FieldPtr K = cfg.gaussian ? NumberField::create({Int(1), Int(0), Int(1)})
                            : NumberField::create({Int(0), Int(1)});
  std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + (uint64_t)(id + 1));
  std::uniform_int_distribution<int> len(2, 4);
  std::uniform_int_distribution<int> side(0, 1);
  MatrixSet F;
  F.field = K;
  F.d = 2;
  F.sl = true;
  for (int g = 0; g < 2; ++g) {
    KMatrix m = KMatrix::identity(K, 2);
    int L = len(rng);
    bool upper = !cfg.upper_triangular && side(rng);
    for (int i = 0; i < L; ++i) {
      m = m * elementary(K, upper, random_param(K, cfg.entry_height, cfg.gaussian, rng));
      if (!cfg.upper_triangular) upper = !upper;  // alternate sides within a word
    }
    F.mats.push_back(std::move(m));
  }
  return F;
}

GapScanResult gap_scan(const GapScanConfig& cfg) {
  GapScanResult out;
  out.rows.resize((size_t)std::max(cfg.count, 0));
  int nthreads = std::max(1, cfg.threads);
  // independent per-sample jobs; the merge below is ordered, so the thread
  // count never shows in the output
  auto worker = [&](int t) {
    for (int i = t; i < cfg.count; i += nthreads) out.rows[(size_t)i] = scan_one(cfg, i);
  };
  if (nthreads == 1 || cfg.count <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::ostringstream os;
  os << "# hg-v1 gap-scan seed=" << cfg.seed << " count=" << cfg.count
     << " entry_height=" << cfg.entry_height << " ring=" << (cfg.gaussian ? "Z[i]" : "Z")
     << " shape=" << (cfg.upper_triangular ? "upper-triangular" : "full")
     << " n_max=" << cfg.n_max << " budget=" << cfg.budget << "\n";
  os << "# sampler: pairs of words of uniform length 2..4 in E12(x), E21(x), "
        "x uniform on nonzero entries of height <= entry_height\n";
  os << "id,proxy,hhat_lower,hhat_upper,witness,truncated\n";
  bool any = false;
  for (auto& r : out.rows) {
    if (r.failed) {
      os << r.id << ",error,NA,NA,," << (r.truncated ? 1 : 0) << "\n";
      continue;
    }
    os << r.id << "," << r.proxy << "," << (r.truncated ? "NA" : csv_num(r.hhat.lower)) << ","
       << (r.truncated ? "NA" : csv_num(r.hhat.upper)) << "," << r.witness << ","
       << (r.truncated ? 1 : 0) << "\n";
    if (r.proxy == "none" && !r.truncated) {
      if (!any || r.hhat.lower < out.min_lower_nonsolvable)
        out.min_lower_nonsolvable = r.hhat.lower;
      any = true;
      ++out.nonsolvable_count;
    }
  }
  os << "# summary nonsolvable=" << out.nonsolvable_count << " min_hhat_lower="
     << (any ? csv_num(out.min_lower_nonsolvable) : "NA") << "\n";
  out.csv = os.str();
  return out;
}

std::vector<ZPoly> bilu_family(const BiluConfig& cfg) {
  std::vector<ZPoly> seq;
  if (cfg.family == "pow2-roots") {
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
      ZPoly f((size_t)(1l << k) + 1, Int(0));
      f[0] = -2;
      f.back() = 1;
      seq.push_back(std::move(f));
    }
  } else if (cfg.family == "cyclotomic") {
    for (unsigned long p : cfg.primes) seq.push_back(cyclotomic(p));
  } else if (cfg.family == "custom") {
    seq = cfg.custom;
  } else {
    throw Error(ErrorCode::Usage, "unknown family: " + cfg.family);
  }
  if (seq.empty() && cfg.family != "custom")
    throw Error(ErrorCode::Usage, "empty family range");
  return seq;
}

std::string bilu_csv(const std::vector<ZPoly>& sequence) {
  std::vector<OrbitStats> rows = bilu_report(sequence);
  std::ostringstream os;
  os << "# hg-v1 bilu\n";
  os << "degree,height,discrepancy,ks_stat,log_distance_stat,modulus_spread,flag\n";
  for (auto& st : rows)
    os << st.degree << "," << csv_num(st.height) << "," << csv_num(st.star_discrepancy) << ","
       << csv_num(st.ks_stat) << "," << csv_num(st.log_distance_stat) << ","
       << csv_num(st.modulus_spread) << "," << (st.hypothesis_flag ? 1 : 0) << "\n";
  return os.str();
}

}  // namespace hg
