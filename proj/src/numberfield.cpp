#include "hg/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hg/error.hpp"

namespace hg {

namespace {

constexpr unsigned kDefaultPrecision = 64;
constexpr unsigned kMaxPrecision = 4096;

Int squarefree_part(const Int& n) {
  Int r = n < 0 ? Int(-1) : Int(1);
  for (auto& [p, e] : factorize(n))
    if (e % 2 == 1) r *= p;
  return r;
}

}  // namespace

FieldPtr NumberField::create(const ZPoly& min_poly) {
  ZPoly f = trim(min_poly);
  int n = hg::degree(f);
  if (n < 1) throw Error(ErrorCode::DegreeZero, "minimal polynomial must be nonconstant");
  if (f.back() != 1) throw Error(ErrorCode::NotMonic, "minimal polynomial must be monic");
  if (!is_irreducible_over_q(f))
    throw Error(ErrorCode::ReduciblePoly, "minimal polynomial factors over Q");

  auto K = std::shared_ptr<NumberField>(new NumberField());
  K->min_poly_ = f;
  K->degree_ = n;
  K->disc_ = hg::discriminant(f);

  // archimedean places: one representative per conjugate pair
  int r1 = count_real_roots(to_qpoly(f));
  auto roots = complex_roots(to_qpoly(f));
  std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    return std::abs(a.value.imag()) < std::abs(b.value.imag());
  });
  for (int i = 0; i < r1; ++i) {
    ArchPlace v;
    v.root = {roots[i].value.real(), 0.0};
    v.radius = roots[i].radius;
    v.is_real = true;
    v.n_v = 1;
    K->arch_places_.push_back(v);
  }
  for (size_t i = r1; i < roots.size(); ++i) {
    if (roots[i].value.imag() <= 0) continue;
    ArchPlace v;
    v.root = roots[i].value;
    v.radius = roots[i].radius;
    v.is_real = false;
    v.n_v = 2;
    K->arch_places_.push_back(v);
  }
  int total = 0;
  for (auto& v : K->arch_places_) total += v.n_v;
  if (total != n) throw Error(ErrorCode::PrecisionExhausted, "root separation failed");
  std::sort(K->arch_places_.begin(), K->arch_places_.end(),
            [](const ArchPlace& a, const ArchPlace& b) {
              if (a.is_real != b.is_real) return a.is_real;
              if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
              return a.root.imag() < b.root.imag();
            });

  // recognize cyclotomic fields (needed for ramified-prime splitting rules)
  unsigned long cap = max_order_with_phi_bound(n);
  for (unsigned long m = 1; m <= cap; ++m) {
    if (euler_phi(m) != n) continue;
    if (cyclotomic(m) == f) {
      K->cyclo_order_ = m;
      break;
    }
  }
  return K;
}

std::vector<FinitePlace> NumberField::finite_places(const Int& p, unsigned precision) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = place_cache_.find({p, precision});
    if (it != place_cache_.end()) return it->second;
  }
  const ZPoly& f = min_poly_;
  int n = degree_;
  Int pN = pow(p, precision);
  std::vector<FinitePlace> places;
  auto single_place = [&](int e, int fr) {
    FinitePlace v;
    v.prime = p;
    v.local_factor = mod_reduce(f, pN);
    v.local_degree = n;
    v.ramification_index = e;
    v.residue_degree = fr;
    v.precision = precision;
    v.index_above_p = 0;
    places.push_back(v);
  };

  MPoly fp = mod_reduce(f, p);
  MPoly fpd = mod_reduce(derivative(f), p);
  bool squarefree_mod_p = (int)fp.size() - 1 == n && mod_gcd(fp, fpd, p).size() <= 1;

  if (n == 1) {
    single_place(1, 1);
  } else if (squarefree_mod_p) {
    auto factors = factor_mod_p(fp, p);
    auto lifted = hensel_lift(f, factors, p, precision);
    // keep the pairing with the sorted mod-p factors for a stable ordering
    for (size_t i = 0; i < lifted.size(); ++i) {
      FinitePlace v;
      v.prime = p;
      v.local_factor = lifted[i];
      v.local_degree = (int)lifted[i].size() - 1;
      v.ramification_index = 1;
      v.residue_degree = v.local_degree;
      v.precision = precision;
      v.index_above_p = (int)i;
      places.push_back(v);
    }
  } else if (n == 2) {
    // closed-form splitting for quadratic fields, also covering primes
    // dividing the index of Z[theta]
    Int b = f[1], c = f[0];
    Int delta = b * b - 4 * c;
    Int D = squarefree_part(delta);
    long vd = valp(delta, p);
    bool split = false;
    Int sqrt_delta = 0;
    unsigned workN = precision + (p == 2 ? 4 : 1) + (unsigned)vd;
    Int pW = pow(p, workN);
    if (vd % 2 == 0) {
      Int unit = delta / pow(p, (unsigned long)vd);
      auto s = padic_sqrt(unit, p, workN);
      if (s) {
        split = true;
        sqrt_delta = *s * pow(p, (unsigned long)(vd / 2)) % pW;
      }
    }
    if (split) {
      for (int sign = 0; sign < 2; ++sign) {
        Int s = sign ? (pW - sqrt_delta) % pW : sqrt_delta;
        Int num = ((-b + s) % pW + pW) % pW;
        Int root;
        if (p == 2) {
          if (num % 2 != 0) throw Error(ErrorCode::PrecisionExhausted, "parity in 2-adic root");
          root = (num / 2) % pN;
        } else {
          root = num * invmod(Int(2), pN) % pN;
        }
        FinitePlace v;
        v.prime = p;
        v.local_factor = {(pN - root % pN) % pN, Int(1)};  // x - root
        v.local_degree = 1;
        v.ramification_index = 1;
        v.residue_degree = 1;
        v.precision = precision;
        v.index_above_p = sign;
        places.push_back(v);
      }
      std::sort(places.begin(), places.end(),
                [](const FinitePlace& a, const FinitePlace& b) {
                  return a.local_factor[0] < b.local_factor[0];
                });
      for (size_t i = 0; i < places.size(); ++i) places[i].index_above_p = (int)i;
    } else {
      bool ramified;
      if (p == 2)
        ramified = (D % 2 == 0) || (((D % 4) + 4) % 4 == 3);
      else
        ramified = (D % p == 0);
      if (ramified)
        single_place(2, 1);
      else
        single_place(1, 2);
    }
  } else if (cyclo_order_) {
    unsigned long m = *cyclo_order_;
    unsigned long pa = 1, mprime = m;
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    while (mprime % pl == 0) {
      mprime /= pl;
      pa *= pl;
    }
    if (pa == 1) throw Error(ErrorCode::RamifiedUnsupported, "unexpected cyclotomic case");
    unsigned long e = mpz_get_ui(euler_phi(pa).get_mpz_t());
    // multiplicative order of p mod m'
    unsigned long fr = 1;
    if (mprime > 1) {
      Int acc = p % Int(mprime);
      while (acc != 1) {
        acc = acc * p % Int(mprime);
        ++fr;
      }
    }
    unsigned long g = mprime > 1 ? mpz_get_ui(euler_phi(mprime).get_mpz_t()) / fr : 1;
    if (g != 1)
      throw Error(ErrorCode::RamifiedUnsupported,
                  "cyclotomic ramified prime with several places above it");
    single_place((int)e, (int)fr);
  } else {
    throw Error(ErrorCode::RamifiedUnsupported,
                "ramified prime outside the closed-form class (quadratic/cyclotomic/Q)");
  }

  int sum = 0;
  for (auto& v : places) sum += v.local_degree;
  if (sum != n) throw Error(ErrorCode::PrecisionExhausted, "local degrees do not sum to n");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    place_cache_[{p, precision}] = places;
  }
  return places;
}

// ---- FieldElement ----

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if ((int)coeffs_.size() != field_->degree())
    throw Error(ErrorCode::FieldMismatch, "coefficient vector length != degree");
}

FieldElement FieldElement::from_rational(const FieldPtr& field, const Rat& q) {
  std::vector<Rat> c(field->degree(), Rat(0));
  c[0] = q;
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  std::vector<Rat> c(field->degree(), Rat(0));
  if (field->degree() == 1) {
    // theta is the rational root of the degree-1 polynomial
    c[0] = Rat(-field->min_poly()[0]);
  } else {
    c[1] = 1;
  }
  return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
  if (!field_) return true;
  for (auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  if (!field_) return true;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::FieldMismatch, "element not rational");
  return field_ ? coeffs_[0] : Rat(0);
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field()) return;
  if (a.field() != b.field() && a.field()->min_poly() != b.field()->min_poly())
    throw Error(ErrorCode::FieldMismatch, "elements of different fields");
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(*this, o);
  if (!field_) return o;
  if (!o.field_) return *this;
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
  if (!field_) return *this;
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(*this, o);
  if (!field_) return *this;
  if (!o.field_) return o;
  QPoly prod = mul(QPoly(coeffs_.begin(), coeffs_.end()), QPoly(o.coeffs_.begin(), o.coeffs_.end()));
  QPoly rem = divmod(prod, to_qpoly(field_->min_poly())).second;
  rem.resize(field_->degree(), Rat(0));
  return FieldElement(field_, std::move(rem));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivideByZero, "inverse of zero");
  // extended Euclid in Q[x] against the minimal polynomial
  QPoly a = trim(QPoly(coeffs_.begin(), coeffs_.end()));
  QPoly f = to_qpoly(field_->min_poly());
  QPoly r0 = f, r1 = a, t0 = {}, t1 = {Rat(1)};
  while (!r1.empty() && degree(r1) > 0) {
    auto [q, r2] = divmod(r0, r1);
    QPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1); r1 = std::move(r2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r1.empty()) throw Error(ErrorCode::DivideByZero, "element not invertible");
  QPoly inv = scale(t1, Rat(1) / r1[0]);
  inv = divmod(inv, f).second;
  inv.resize(field_->degree(), Rat(0));
  return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
  if (!field_ || !o.field_) return is_zero() && o.is_zero();
  check_same_field(*this, o);
  return coeffs_ == o.coeffs_;
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement result = from_rational(field_, 1);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Rat FieldElement::norm() const {
  auto [H, c] = clear_denominators(QPoly(coeffs_.begin(), coeffs_.end()));
  if (H.empty()) return 0;
  Int res = resultant(field_->min_poly(), H);
  Rat out = Rat(res) / Rat(hg::pow(Int(c), (unsigned long)field_->degree()));
  out.canonicalize();
  return out;
}

ZPoly FieldElement::minimal_polynomial() const {
  int n = field_->degree();
  if (is_rational()) {
    Rat q = coeffs_[0];
    return trim(ZPoly{-q.get_num(), q.get_den()});
  }
  // characteristic polynomial of multiplication by x, then its squarefree part
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  FieldElement theta = generator(field_);
  FieldElement cur = *this;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) M[i][j] = cur.coeffs()[i];
    cur = cur * theta;
  }
  // char poly by Faddeev-LeVerrier
  std::vector<std::vector<Rat>> A = M, B = M;
  QPoly chi(n + 1, Rat(0));
  chi[n] = 1;
  for (int k = 1; k <= n; ++k) {
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += B[i][i];
    Rat ck = -tr / Rat((long)k);
    chi[n - k] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) B[i][i] += ck;
    std::vector<std::vector<Rat>> C(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) C[i][j] += A[i][l] * B[l][j];
    B = std::move(C);
  }
  QPoly sf = divmod(chi, gcd(chi, derivative(chi))).first;
  ZPoly z = primitive_part(clear_denominators(sf).first);
  if (z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

std::complex<double> FieldElement::embed(const ArchPlace& v) const {
  return eval(QPoly(coeffs_.begin(), coeffs_.end()), v.root);
}

std::string FieldElement::key() const {
  std::ostringstream os;
  for (auto& c : coeffs_) os << c.get_str() << ";";
  return os.str();
}

// ---- absolute values & heights ----

double abs_value(const FieldElement& x, const ArchPlace& v) {
  return std::abs(x.embed(v));
}

Rat exact_valuation(const FieldElement& x, const FinitePlace& v) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "valuation of zero");
  const Int& p = v.prime;
  auto [H, c] = clear_denominators(QPoly(x.coeffs().begin(), x.coeffs().end()));
  long vc = c == 1 ? 0 : valp(c, p);
  FinitePlace place = v;
  while (true) {
    ZPoly g(place.local_factor.begin(), place.local_factor.end());
    Int res = resultant(g, H);
    if (res != 0) {
      long vr = valp(res, p);
      if (vr < (long)place.precision) {
        Rat out = Rat(Int(vr), Int((long)place.local_degree)) - Rat(Int(vc));
        out.canonicalize();
        return out;
      }
    }
    unsigned next = place.precision * 2;
    if (next > kMaxPrecision)
      throw Error(ErrorCode::PrecisionExhausted, "resultant valuation undetermined at max precision");
    auto places = x.field()->finite_places(p, next);
    place = places.at(v.index_above_p);
  }
}

double abs_value(const FieldElement& x, const FinitePlace& v) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "|0|_v requested");
  Rat val = exact_valuation(x, v);
  return std::pow(to_double(Rat(v.prime)), -to_double(val));
}

std::vector<Int> contributing_primes(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "support of zero");
  auto [H, c] = clear_denominators(QPoly(x.coeffs().begin(), x.coeffs().end()));
  Int res = resultant(x.field()->min_poly(), H);
  std::vector<Int> primes;
  if (res != 0 && res != 1 && res != -1)
    for (auto& [p, e] : factorize(res)) primes.push_back(p);
  if (c != 1)
    for (auto& [p, e] : factorize(c))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  return primes;
}

double height_infinite(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "height of zero");
  const auto& K = x.field();
  double sum = 0;
  for (auto& v : K->arch_places()) {
    double a = abs_value(x, v);
    if (a > 1) sum += v.n_v * std::log(a);
  }
  return sum / K->degree();
}

double height_finite(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "height of zero");
  const auto& K = x.field();
  double sum = 0;
  for (auto& p : contributing_primes(x)) {
    for (auto& v : K->finite_places(p, kDefaultPrecision)) {
      Rat val = exact_valuation(x, v);
      if (val < 0) sum += v.local_degree * (-to_double(val)) * std::log(to_double(Rat(p)));
    }
  }
  return sum / K->degree();
}

double height(const FieldElement& x) { return height_infinite(x) + height_finite(x); }

double mahler_height_oracle(const ZPoly& min_poly_of_x) {
  ZPoly f = primitive_part(trim(min_poly_of_x));
  int n = degree(f);
  if (n < 1) throw Error(ErrorCode::DegreeZero, "constant polynomial");
  if (!is_irreducible_over_q(f))
    throw Error(ErrorCode::ReduciblePoly, "not a minimal polynomial");
  double lm = std::log(std::abs(mpz_get_d(f.back().get_mpz_t())));
  for (auto& r : complex_roots(to_qpoly(f))) {
    double a = std::abs(r.value);
    if (a > 1) lm += std::log(a);
  }
  return lm / n;
}

double product_formula_residual(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "product formula of zero");
  const auto& K = x.field();
  if (K->is_rationals()) {
    // over Q the whole product is an exact rational, necessarily 1
    Rat r = ::abs(x.rational_value());
    for (auto& p : contributing_primes(x)) {
      Rat vr = exact_valuation(x, K->finite_places(p, kDefaultPrecision)[0]);
      long val = mpz_get_si(vr.get_num().get_mpz_t());
      Int pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), (unsigned long)std::labs(val));
      if (val >= 0)
        r /= Rat(pk);
      else
        r *= Rat(pk);
    }
    r.canonicalize();
    return std::log(to_double(r));
  }
  double sum = 0;
  for (auto& v : K->arch_places()) sum += v.n_v * std::log(abs_value(x, v));
  // exact finite part accumulated as a rational combination per prime
  for (auto& p : contributing_primes(x)) {
    Rat tot = 0;
    for (auto& v : K->finite_places(p, kDefaultPrecision))
      tot += Rat((long)v.local_degree) * exact_valuation(x, v);
    sum -= to_double(tot) * std::log(to_double(Rat(p)));
  }
  return sum;
}

std::optional<unsigned long> root_of_unity_order(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "root of unity test of zero");
  const auto& K = x.field();
  // quick screen: all archimedean absolute values must be 1
  for (auto& v : K->arch_places())
    if (std::abs(abs_value(x, v) - 1.0) > 1e-6) return std::nullopt;
  unsigned long cap = max_order_with_phi_bound(K->degree());
  FieldElement one = FieldElement::from_rational(K, 1);
  FieldElement acc = x;
  for (unsigned long m = 1; m <= cap; ++m) {
    if (acc == one) return m;
    acc = acc * x;
  }
  return std::nullopt;
}

// ---- polynomials over K ----

KPoly ktrim(KPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

KPoly kadd(const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    FieldElement s;
    if (i < a.size()) s = s + a[i];
    if (i < b.size()) s = s + b[i];
    r[i] = s;
  }
  return ktrim(std::move(r));
}

KPoly ksub(const KPoly& a, const KPoly& b) {
  KPoly nb(b.size());
  for (size_t i = 0; i < b.size(); ++i) nb[i] = -b[i];
  return kadd(a, nb);
}

KPoly kmul(const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return ktrim(std::move(r));
}

std::pair<KPoly, KPoly> kdivmod(const KPoly& a, const KPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivideByZero, "K[x] division by zero");
  KPoly r = ktrim(a), q;
  FieldElement lead_inv = b.back().inverse();
  if (r.size() >= b.size()) q.resize(r.size() - b.size() + 1);
  while (r.size() >= b.size() && !r.empty()) {
    FieldElement f = r.back() * lead_inv;
    size_t shift = r.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] = r[shift + i] - f * b[i];
    r = ktrim(std::move(r));
  }
  return {ktrim(std::move(q)), std::move(r)};
}

KPoly kgcd(const KPoly& a, const KPoly& b) {
  KPoly x = ktrim(a), y = ktrim(b);
  while (!y.empty()) {
    KPoly r = kdivmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return x;
  FieldElement inv = x.back().inverse();
  for (auto& c : x) c = c * inv;
  return x;
}

KPoly kderivative(const KPoly& p) {
  if (p.size() <= 1) return {};
  KPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i)
    r[i - 1] = p[i] * FieldElement::from_rational(p[i].field(), Rat((long)i));
  return ktrim(std::move(r));
}

FieldElement keval(const KPoly& p, const FieldElement& x) {
  FieldElement r;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

KPoly kfrom_q(const FieldPtr& K, const QPoly& p) {
  KPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = FieldElement::from_rational(K, p[i]);
  return ktrim(std::move(r));
}

KPoly kfrom_z(const FieldPtr& K, const ZPoly& p) { return kfrom_q(K, to_qpoly(p)); }

bool kis_rational(const KPoly& p) {
  for (auto& c : p)
    if (!c.is_rational()) return false;
  return true;
}

QPoly kto_q(const KPoly& p) {
  QPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i].is_zero() ? Rat(0) : p[i].rational_value();
  return trim(std::move(r));
}

FieldElement kresultant(const KPoly& a, const KPoly& b) {
  // Euclidean resultant over the field
  KPoly x = ktrim(a), y = ktrim(b);
  if (x.empty() || y.empty()) return FieldElement();
  FieldPtr K = x.back().field();
  FieldElement res = FieldElement::from_rational(K, 1);
  while (true) {
    if (y.size() == 1) {
      res = res * y[0].pow((unsigned long)(x.size() - 1));
      return res;
    }
    KPoly r = kdivmod(x, y).second;
    if (r.empty()) return FieldElement::from_rational(K, 0);
    int dx = (int)x.size() - 1, dy = (int)y.size() - 1, dr = (int)r.size() - 1;
    // res(x,y) = (-1)^{dx*dy} lc(y)^{dx-dr} res(y,r)
    FieldElement factor = y.back().pow((unsigned long)(dx - dr));
    if ((dx * dy) % 2 == 1) factor = -factor;
    res = res * factor;
    x = std::move(y);
    y = std::move(r);
  }
}

}  // namespace hg
