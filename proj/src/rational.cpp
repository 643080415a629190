#include "csn/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace csn {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 u128_abs(i128 x) { return x < 0 ? u128(-(x + 1)) + 1 : u128(x); }

u128 u128_gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kI64Max = std::numeric_limits<long long>::max();

bool fits_i64(i128 x) { return x <= kI64Max && x >= -kI64Max; }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 m = u128_abs(v);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class r = (hi << 64) + static_cast<unsigned long>(m & ~0ULL);
  return neg ? mpz_class(-r) : r;
}

mpq_class mpq_from_i128(i128 n, i128 d) {
  mpq_class q(mpz_from_i128(n));
  q /= mpq_class(mpz_from_i128(d));
  return q;
}

// Scratch views let small operands join GMP calls without allocating.
struct ScratchQ {
  mpq_t q;
  ScratchQ() { mpq_init(q); }
  ~ScratchQ() { mpq_clear(q); }
};

thread_local ScratchQ scratch_a, scratch_b;

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    // Safe even for LLONG_MIN via the 128-bit path below.
    i128 nn = -i128(n), dd = -i128(d);
    u128 g = u128_gcd(u128_abs(nn), u128(dd));
    nn /= i128(g);
    dd /= i128(g);
    num_ = static_cast<long long>(nn);
    den_ = static_cast<long long>(dd);
    return;
  }
  u128 g = u128_gcd(u128_abs(n), u128(d));
  if (g > 1) {
    n = static_cast<long long>(i128(n) / i128(g));
    d = static_cast<long long>(u128(d) / g);
  }
  num_ = n;
  den_ = d;
}

void Rat::set_mpq(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(c));
  }
}

mpq_srcptr Rat::view_into(mpq_t scratch) const {
  if (big_) return big_->get_mpq_t();
  // Already canonical; set the parts directly.
  mpz_set_si(mpq_numref(scratch), num_);
  mpz_set_si(mpq_denref(scratch), den_);
  return scratch;
}

Rat Rat::gmp_binary(GmpBinary op, const Rat& o) const {
  Rat r;
  r.big_ = std::make_unique<mpq_class>();
  op(r.big_->get_mpq_t(), view_into(scratch_a.q), o.view_into(scratch_b.q));
  r.demote_if_small();
  return r;
}

void Rat::demote_if_small() {
  if (big_ && big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
    num_ = big_->get_num().get_si();
    den_ = big_->get_den().get_si();
    big_.reset();
  }
}

Rat Rat::operator+(const Rat& o) const {
  if (!big_ && !o.big_) {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    u128 g = u128_gcd(u128_abs(n), u128(d));
    if (g > 1) {
      n /= i128(g);
      d /= i128(g);
    }
    Rat r;
    if (fits_i64(n) && fits_i64(d)) {
      r.num_ = static_cast<long long>(n);
      r.den_ = static_cast<long long>(d);
    } else {
      r.big_ = std::make_unique<mpq_class>(mpq_from_i128(n, d));
    }
    return r;
  }
  return gmp_binary(mpq_add, o);
}

Rat Rat::operator-(const Rat& o) const {
  if (!big_ && !o.big_) return *this + (-o);
  return gmp_binary(mpq_sub, o);
}

Rat Rat::operator*(const Rat& o) const {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) return Rat();
    // Cross-cancel before multiplying to keep products small.
    u128 g1 = u128_gcd(u128_abs(num_), u128(o.den_));
    u128 g2 = u128_gcd(u128_abs(o.num_), u128(den_));
    i128 n = (i128(num_) / i128(g1)) * (i128(o.num_) / i128(g2));
    i128 d = (i128(den_) / i128(g2)) * (i128(o.den_) / i128(g1));
    Rat r;
    if (fits_i64(n) && fits_i64(d)) {
      r.num_ = static_cast<long long>(n);
      r.den_ = static_cast<long long>(d);
    } else {
      r.big_ = std::make_unique<mpq_class>(mpq_from_i128(n, d));
    }
    return r;
  }
  return gmp_binary(mpq_mul, o);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw DomainError("rational division by zero");
  if (!o.big_) {
    Rat inv;
    if (o.num_ > 0) {
      inv.num_ = o.den_;
      inv.den_ = o.num_;
    } else if (o.num_ == std::numeric_limits<long long>::min()) {
      inv.big_ = std::make_unique<mpq_class>(mpq_from_i128(-i128(o.den_), -i128(o.num_)));
    } else {
      inv.num_ = -o.den_;
      inv.den_ = -o.num_;
    }
    return *this * inv;
  }
  return gmp_binary(mpq_div, o);
}

Rat Rat::operator-() const {
  Rat r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
    r.demote_if_small();
  } else if (r.num_ == std::numeric_limits<long long>::min()) {
    r.big_ = std::make_unique<mpq_class>(mpq_from_i128(-i128(r.num_), i128(r.den_)));
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

int Rat::compare(const Rat& o) const {
  if (!big_ && !o.big_) {
    i128 lhs = i128(num_) * o.den_;
    i128 rhs = i128(o.num_) * den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  return mpq_cmp(view_into(scratch_a.q), o.view_into(scratch_b.q));
}

int Rat::sign() const {
  if (big_) return mpq_sgn(big_->get_mpq_t());
  return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0);
}

bool Rat::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

std::string Rat::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

double Rat::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(num_), static_cast<long>(den_));
  q.canonicalize();
  return q;
}

mpz_class Rat::numerator() const { return to_mpq().get_num(); }
mpz_class Rat::denominator() const { return to_mpq().get_den(); }

Rat Rat::parse(std::string_view text) {
  auto fail = [&] { throw ParseError("bad rational: '" + std::string(text) + "'"); };
  if (text.empty()) fail();

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string num(text.substr(0, slash));
    std::string den(text.substr(slash + 1));
    if (num.empty() || den.empty()) fail();
    mpz_class n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) fail();
    if (d == 0) fail();
    Rat r;
    r.set_mpq(mpq_class(n) / mpq_class(d));
    return r;
  }

  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string whole(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (frac.empty()) fail();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    mpz_class w;
    if (w.set_str(whole, 10) != 0) fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class f;
    if (f.set_str(frac, 10) != 0) fail();
    mpz_class n = w * scale + (neg ? -f : f);
    Rat r;
    r.set_mpq(mpq_class(n) / mpq_class(scale));
    return r;
  }

  mpz_class n;
  if (n.set_str(std::string(text), 10) != 0) fail();
  Rat r;
  r.set_mpq(mpq_class(n));
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace csn
