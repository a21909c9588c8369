#include "hg/structure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "hg/error.hpp"

namespace hg {

namespace {

// exact row reduction workspace over K for vectors of fixed length
class Echelon {
 public:
  explicit Echelon(int len) : len_(len) {}

  // returns true (and stores) when v is independent of the current span
  bool add(std::vector<FieldElement> v) {
    for (auto& [piv, row] : rows_) {
      if (v[piv].is_zero()) continue;
      FieldElement f = v[piv];
      for (int i = 0; i < len_; ++i) v[i] = v[i] - f * row[i];
    }
    int piv = -1;
    for (int i = 0; i < len_; ++i)
      if (!v[i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    FieldElement inv = v[piv].inverse();
    for (int i = 0; i < len_; ++i) v[i] = v[i] * inv;
    rows_.push_back({piv, std::move(v)});
    return true;
  }

  int rank() const { return (int)rows_.size(); }

 private:
  int len_;
  std::vector<std::pair<int, std::vector<FieldElement>>> rows_;
};

std::vector<FieldElement> vectorize(const KMatrix& m) {
  std::vector<FieldElement> v;
  v.reserve((size_t)m.dim() * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
  return v;
}

// distinct word products in length-lex order (first word kept per product)
std::vector<Word> enumerate_products(const MatrixSet& F, int maxlen, bool include_id) {
  std::vector<Word> out;
  std::set<std::string> seen;
  Word id{{}, KMatrix::identity(F.field, F.d)};
  if (include_id) {
    seen.insert(id.product.key());
    out.push_back(id);
  }
  std::vector<Word> frontier{id};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (auto& w : frontier) {
      for (int l = 0; l < (int)F.mats.size(); ++l) {
        Word w2;
        w2.letters = w.letters;
        w2.letters.push_back(l);
        w2.product = w.product * F.mats[(size_t)l];
        next.push_back(w2);
      }
    }
    for (auto& w : next) {
      std::string k = w.product.key();
      if (seen.count(k)) continue;
      seen.insert(k);
      out.push_back(w);
    }
    frontier = std::move(next);
  }
  return out;
}

KMatrix word_inverse_product(const MatrixSet& F, const std::vector<int>& letters) {
  KMatrix m = KMatrix::identity(F.field, F.d);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int l = *it;
    m = m * (l >= 0 ? F.mats[(size_t)l].inverse() : F.mats[(size_t)(-l - 1)]);
  }
  return m;
}

}  // namespace

SpanCertificate burnside_span(const MatrixSet& F) {
  F.validate();
  int D = F.d * F.d;
  Echelon ech(D);
  SpanCertificate cert;
  Word id{{}, KMatrix::identity(F.field, F.d)};
  ech.add(vectorize(id.product));
  cert.basis_words.push_back(id);
  size_t scan = 0;
  while (scan < cert.basis_words.size() && ech.rank() < D) {
    Word w = cert.basis_words[scan];
    ++scan;
    for (int l = 0; l < (int)F.mats.size() && ech.rank() < D; ++l) {
      Word w2;
      w2.letters = w.letters;
      w2.letters.push_back(l);
      w2.product = w.product * F.mats[(size_t)l];
      if (ech.add(vectorize(w2.product))) cert.basis_words.push_back(w2);
    }
  }
  cert.dimension = ech.rank();
  return cert;
}

QuasiUnipotentResult is_quasi_unipotent(const MatrixSet& F, int word_len) {
  F.validate();
  const FieldPtr& K = F.field;
  unsigned long cap = max_order_with_phi_bound((unsigned long)(F.d * K->degree()));
  std::vector<KPoly> cyclos;
  for (unsigned long m = 1; m <= cap; ++m)
    if (euler_phi(m) <= F.d * K->degree()) cyclos.push_back(kfrom_z(K, cyclotomic(m)));
  QuasiUnipotentResult res;
  res.searched_len = word_len;
  for (auto& w : enumerate_products(F, word_len, false)) {
    KPoly c = w.product.charpoly();
    for (auto& phi : cyclos) {
      while (c.size() >= phi.size()) {
        auto [q, r] = kdivmod(c, phi);
        if (!r.empty()) break;
        c = q;
      }
      if (c.size() <= 1) break;
    }
    if (c.size() > 1) {
      res.certified_no = true;
      res.witness = w.letters;
      return res;
    }
  }
  return res;
}

std::vector<Word> finite_index_generators(const MatrixSet& F, const Membership& in_gamma0,
                                          int k) {
  F.validate();
  // coset representatives of Gamma_0 among products of length <= k
  auto collect_reps = [&](bool inverses) {
    std::vector<Word> reps;
    MatrixSet G = F;
    if (inverses)
      for (auto& m : G.mats) m = m.inverse();
    for (auto& w : enumerate_products(G, k, true)) {
      bool fresh = true;
      for (auto& r : reps) {
        if (in_gamma0(w.product * r.product.inverse())) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        Word rep = w;
        if (inverses)
          for (auto& l : rep.letters) l = -l - 1;
        reps.push_back(rep);
        if ((int)reps.size() > k)
          throw Error(ErrorCode::IndexExceeded, "more cosets than the stated index bound");
      }
    }
    return reps;
  };
  std::vector<Word> s_reps = collect_reps(false);
  std::vector<Word> u_reps = collect_reps(true);

  std::vector<Word> out;
  std::set<std::string> seen;
  for (auto& s : s_reps) {
    for (int f = 0; f < (int)F.mats.size(); ++f) {
      for (auto& u : u_reps) {
        Word g;
        g.letters = s.letters;
        g.letters.push_back(f);
        for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
          g.letters.push_back(-*it - 1);  // invert the u-word
        g.product = s.product * F.mats[(size_t)f] * word_inverse_product(F, u.letters);
        if (!in_gamma0(g.product)) continue;
        std::string key = g.product.key();
        if (seen.count(key)) continue;
        seen.insert(key);
        out.push_back(g);
      }
    }
  }
  return out;
}

// ---- regularity ----

namespace {

// ratio polynomial S(y) = Res_x(chi(x), y^d chi(x/y)): roots are eigenvalue
// ratios; computed by evaluation / interpolation over K
KPoly ratio_polynomial(const FieldPtr& K, const KPoly& chi) {
  int d = (int)chi.size() - 1;
  int D = d * d;
  std::vector<FieldElement> nodes, vals;
  for (int k = 1; k <= D + 1; ++k) {
    FieldElement yk = FieldElement::from_rational(K, Rat((long)k));
    KPoly cy(chi.size());
    FieldElement pw = FieldElement::from_rational(K, 1);
    for (int i = d; i >= 0; --i) {
      cy[i] = chi[i] * pw;  // coefficient of x^i gains y^{d-i}
      pw = pw * yk;
    }
    nodes.push_back(yk);
    vals.push_back(kresultant(chi, cy));
  }
  // Newton interpolation
  std::vector<FieldElement> coef = vals;
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (nodes[i] - nodes[i - j]);
  KPoly poly{coef[D]};
  for (int i = D - 1; i >= 0; --i) {
    KPoly shifted(poly.size() + 1);
    for (size_t t = 0; t < poly.size(); ++t) {
      shifted[t + 1] = shifted[t + 1] + poly[t];
      shifted[t] = shifted[t] - poly[t] * nodes[i];
    }
    shifted[0] = shifted[0] + coef[i];
    poly = ktrim(std::move(shifted));
  }
  return poly;
}

// binary quadratic form tracking the fixed directions of a 2x2 matrix
std::array<FieldElement, 3> eigenform_d2(const KMatrix& g) {
  // v = (X,Y) fixed projectively iff c X^2 + (d-a) XY - b Y^2 = 0
  return {g.at(1, 0), g.at(1, 1) - g.at(0, 0), -g.at(0, 1)};
}

bool form_is_zero(const std::array<FieldElement, 3>& q) {
  return q[0].is_zero() && q[1].is_zero() && q[2].is_zero();
}

FieldElement quad_resultant(const std::array<FieldElement, 3>& q1,
                            const std::array<FieldElement, 3>& q2) {
  FieldElement ac = q1[0] * q2[2] - q2[0] * q1[2];
  FieldElement ab = q1[0] * q2[1] - q2[0] * q1[1];
  FieldElement bc = q1[1] * q2[2] - q2[1] * q1[2];
  return ac * ac - ab * bc;
}

}  // namespace

RegularityReport regularity_predicates(const KMatrix& a, int A1) {
  const FieldPtr& K = a.field();
  if (!(a.det() == FieldElement::from_rational(K, 1)))
    throw Error(ErrorCode::NotUnimodular, "regularity predicates need det = 1");
  RegularityReport r;
  KPoly chi = a.charpoly();
  KPoly g = kgcd(chi, kderivative(chi));
  r.regular_semisimple = g.size() <= 1;
  if (!r.regular_semisimple) return r;
  KPoly S = ratio_polynomial(K, chi);
  // remove the d trivial ratios lambda_i / lambda_i = 1
  KPoly ym1 = {FieldElement::from_rational(K, -1), FieldElement::from_rational(K, 1)};
  for (int i = 0; i < a.dim(); ++i) {
    auto [q, rem] = kdivmod(S, ym1);
    if (!rem.empty())
      throw Error(ErrorCode::FieldMismatch, "ratio polynomial lost its trivial roots");
    S = q;
  }
  r.a1_regular = true;
  for (int m = 2; m <= A1 && r.a1_regular; ++m) {
    if (euler_phi((unsigned long)m) > a.dim() * (a.dim() - 1) * K->degree()) continue;
    KPoly phi = kfrom_z(K, cyclotomic((unsigned long)m));
    if (kresultant(S, phi).is_zero()) r.a1_regular = false;
  }
  return r;
}

// ---- escape ----

EscapeWitness escape_search(const MatrixSet& F, const std::string& predicate, int depth,
                            int param) {
  F.validate();
  auto words = enumerate_products(F, depth, true);
  int C = param > 0 ? param : 12;
  int A1 = param > 0 ? param : 2;

  auto in_variety_pair = [&](const Word& x, const Word& y) -> bool {
    if (predicate == "commuting_powers") {
      KMatrix xc = x.product.pow((unsigned long)C);
      KMatrix yc = y.product.pow((unsigned long)C);
      return xc * yc == yc * xc;
    }
    if (predicate == "not_regular_semisimple")
      return !regularity_predicates(x.product, 1).regular_semisimple;
    if (predicate == "not_a1_regular")
      return !regularity_predicates(x.product, A1).a1_regular;
    if (predicate == "in_common_parabolic_d2") {
      if (F.d != 2) throw Error(ErrorCode::Usage, "parabolic predicate requires d = 2");
      auto qx = eigenform_d2(x.product), qy = eigenform_d2(y.product);
      if (form_is_zero(qx) || form_is_zero(qy)) return true;  // scalar fixes everything
      return quad_resultant(qx, qy).is_zero();
    }
    throw Error(ErrorCode::Usage, "unknown escape predicate: " + predicate);
  };
  bool pair_pred = predicate == "commuting_powers" || predicate == "in_common_parabolic_d2";

  for (size_t i = 0; i < words.size(); ++i) {
    if (!pair_pred) {
      if (!in_variety_pair(words[i], words[i]))
        return {words[i], words[i], predicate, depth};
      continue;
    }
    for (size_t j = 0; j < words.size(); ++j) {
      if (!in_variety_pair(words[i], words[j]))
        return {words[i], words[j], predicate, depth};
    }
  }
  throw Error(ErrorCode::NotFoundUpToN, "no escape witness up to the given depth");
}

TwoElementCertificate two_element_reduction(const MatrixSet& F, int A1, int depth,
                                            int jordan_c) {
  F.validate();
  auto words = enumerate_products(F, depth, true);
  std::map<size_t, RegularityReport> reg_cache;
  auto reg = [&](size_t i) {
    auto it = reg_cache.find(i);
    if (it == reg_cache.end())
      it = reg_cache.emplace(i, regularity_predicates(words[i].product, A1)).first;
    return it->second;
  };
  for (size_t i = 0; i < words.size(); ++i) {
    if (!reg(i).a1_regular) continue;
    for (size_t j = 0; j < words.size(); ++j) {
      if (j == i) continue;
      if (!reg(j).a1_regular) continue;
      KMatrix ac = words[i].product.pow((unsigned long)jordan_c);
      KMatrix bc = words[j].product.pow((unsigned long)jordan_c);
      if (ac * bc == bc * ac) continue;
      MatrixSet pair;
      pair.field = F.field;
      pair.d = F.d;
      pair.sl = F.sl;
      pair.mats = {words[i].product, words[j].product};
      SpanCertificate span = burnside_span(pair);
      if (span.dimension != F.d * F.d) continue;
      TwoElementCertificate cert;
      cert.a = words[i];
      cert.b = words[j];
      cert.reg_a = reg(i);
      cert.reg_b = reg(j);
      cert.span_dimension = span.dimension;
      cert.escape_commuting_powers = true;
      return cert;
    }
  }
  throw Error(ErrorCode::NotFoundUpToN, "no certified pair up to the given depth");
}

// ---- projective invariant sets (d = 2) ----

namespace {

// square root inside K, supported for [K:Q] <= 2
std::optional<FieldElement> field_sqrt(const FieldElement& x) {
  const FieldPtr& K = x.field();
  if (x.is_zero()) return FieldElement::from_rational(K, 0);
  auto rat_sqrt = [](const Rat& q) -> std::optional<Rat> {
    if (q < 0) return std::nullopt;
    Int n = q.get_num(), d = q.get_den(), rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rn * rn == n && rd * rd == d) return Rat(rn) / Rat(rd);
    return std::nullopt;
  };
  if (K->degree() == 1 || (x.is_rational() && K->degree() > 2)) {
    if (!x.is_rational()) return std::nullopt;
    auto r = rat_sqrt(x.rational_value());
    if (r) return FieldElement::from_rational(K, *r);
    if (K->degree() == 1) return std::nullopt;
  }
  if (K->degree() != 2) return std::nullopt;
  // solve (a + b*theta)^2 = x over the quadratic field
  Rat f0 = Rat(K->min_poly()[0]), f1 = Rat(K->min_poly()[1]);
  Rat d0 = x.coeffs()[0], d1 = x.coeffs()[1];
  if (d1 == 0) {
    auto r = rat_sqrt(d0);
    if (r) return FieldElement::from_rational(K, *r);
  }
  // u = b^2 satisfies u^2 (f1^2 - 4 f0) + u (2 d1 f1 - 4 d0) + d1^2 = 0
  Rat A = f1 * f1 - 4 * f0, B = 2 * d1 * f1 - 4 * d0, Cc = d1 * d1;
  if (A == 0) return std::nullopt;
  Rat disc = B * B - 4 * A * Cc;
  auto sd = rat_sqrt(disc);
  if (!sd) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    Rat u = (-B + (sign ? -*sd : *sd)) / (2 * A);
    u.canonicalize();
    if (u <= 0) continue;
    auto b = rat_sqrt(u);
    if (!b) continue;
    Rat a = (d1 + u * f1) / (2 * *b);
    a.canonicalize();
    FieldElement s = FieldElement(K, {a, *b});
    if (s * s == x) return s;
  }
  return std::nullopt;
}

struct Atom {
  bool is_pair = false;
  FieldElement x, y;                 // direction when !is_pair, y normalized
  std::array<FieldElement, 3> q{};   // normalized quadratic when is_pair
  std::string key;
};

Atom make_direction(const FieldPtr& K, FieldElement x, FieldElement y) {
  Atom a;
  if (!y.is_zero()) {
    x = x / y;
    y = FieldElement::from_rational(K, 1);
  } else {
    x = FieldElement::from_rational(K, 1);
  }
  a.x = x;
  a.y = y;
  a.key = "d:" + x.key() + "|" + y.key();
  return a;
}

Atom make_pair(const std::array<FieldElement, 3>& q) {
  Atom a;
  a.is_pair = true;
  a.q = q;
  for (int i = 0; i < 3; ++i)
    if (!a.q[i].is_zero()) {
      FieldElement inv = a.q[i].inverse();
      for (int j = 0; j < 3; ++j) a.q[j] = a.q[j] * inv;
      break;
    }
  a.key = "q:" + a.q[0].key() + "|" + a.q[1].key() + "|" + a.q[2].key();
  return a;
}

// split a nonzero form into direction atoms when its roots lie in P^1(K)
std::vector<Atom> atoms_of_form(const FieldPtr& K, const std::array<FieldElement, 3>& q) {
  const FieldElement &A = q[0], &B = q[1], &C = q[2];
  FieldElement two = FieldElement::from_rational(K, 2);
  if (A.is_zero()) {
    std::vector<Atom> out{make_direction(K, FieldElement::from_rational(K, 1),
                                         FieldElement::from_rational(K, 0))};
    if (!B.is_zero()) out.push_back(make_direction(K, -C, B));
    return out;
  }
  FieldElement disc = B * B - FieldElement::from_rational(K, 4) * A * C;
  auto s = field_sqrt(disc);
  if (!s) return {make_pair(q)};
  std::vector<Atom> out{make_direction(K, -B + *s, two * A)};
  Atom other = make_direction(K, -B - *s, two * A);
  if (other.key != out[0].key) out.push_back(other);
  return out;
}

std::string atom_describe(const Atom& a) {
  auto fe = [](const FieldElement& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.coeffs().size(); ++i) {
      if (i) s += ",";
      s += e.coeffs()[i].get_str();
    }
    return s + ")";
  };
  if (!a.is_pair) return "[" + fe(a.x) + ":" + fe(a.y) + "]";
  return "pair{" + fe(a.q[0]) + "X^2+" + fe(a.q[1]) + "XY+" + fe(a.q[2]) + "Y^2}";
}

}  // namespace

ProjectiveInvariantSet projective_invariant_set_d2(const MatrixSet& F, int max_size) {
  F.validate();
  if (F.d != 2) throw Error(ErrorCode::Usage, "projective search requires d = 2");
  const FieldPtr& K = F.field;

  // candidate seeds: eigen-directions of words up to length 2
  std::vector<Atom> seeds;
  std::set<std::string> seed_keys;
  for (auto& w : enumerate_products(F, 2, false)) {
    auto q = eigenform_d2(w.product);
    if (form_is_zero(q)) continue;
    for (auto& a : atoms_of_form(K, q))
      if (!seed_keys.count(a.key)) {
        seed_keys.insert(a.key);
        seeds.push_back(a);
      }
  }
  if (seeds.empty()) {
    // scalar generators: everything is invariant
    ProjectiveInvariantSet r;
    r.found = true;
    r.size = 1;
    r.points = {"[(1):(0)]"};
    return r;
  }

  auto apply = [&](const Atom& a, const KMatrix& g) -> std::vector<Atom> {
    if (!a.is_pair) {
      FieldElement nx = g.at(0, 0) * a.x + g.at(0, 1) * a.y;
      FieldElement ny = g.at(1, 0) * a.x + g.at(1, 1) * a.y;
      return {make_direction(K, nx, ny)};
    }
    KMatrix gi = g.inverse();
    // q'(v) = q(g^-1 v)
    FieldElement al = gi.at(0, 0), be = gi.at(0, 1), ga = gi.at(1, 0), de = gi.at(1, 1);
    const FieldElement &A = a.q[0], &B = a.q[1], &C = a.q[2];
    std::array<FieldElement, 3> q2 = {
        A * al * al + B * al * ga + C * ga * ga,
        FieldElement::from_rational(K, 2) * (A * al * be + C * ga * de) + B * (al * de + be * ga),
        A * be * be + B * be * de + C * de * de};
    return {make_pair(q2)};
  };

  for (auto& seed : seeds) {
    std::map<std::string, Atom> closure{{seed.key, seed}};
    std::vector<Atom> queue{seed};
    int size = seed.is_pair ? 2 : 1;
    bool ok = true;
    while (!queue.empty() && ok) {
      Atom cur = queue.back();
      queue.pop_back();
      for (auto& g : F.mats) {
        for (auto& img : apply(cur, g)) {
          if (closure.count(img.key)) continue;
          size += img.is_pair ? 2 : 1;
          if (size > max_size) {
            ok = false;
            break;
          }
          closure.emplace(img.key, img);
          queue.push_back(img);
        }
        if (!ok) break;
      }
    }
    if (ok) {
      ProjectiveInvariantSet r;
      r.found = true;
      r.size = size;
      for (auto& [k, a] : closure) r.points.push_back(atom_describe(a));
      return r;
    }
  }
  return {};
}

}  // namespace hg
