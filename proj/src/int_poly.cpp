#include <coxeterlab/int_poly.hpp>

#include <sstream>

namespace coxlab {

IntPoly IntPoly::monomial(Int a, int k) {
  if (a == 0) return IntPoly();
  std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
  c.back() = std::move(a);
  return IntPoly(std::move(c));
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading(): zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> c(c_);
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& s) const {
  std::vector<Int> c(c_);
  for (auto& x : c) x *= s;
  return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Int> rem(c_);
  const int dd = d.degree();
  const Int& lead = d.c_.back();
  int rd = static_cast<int>(rem.size()) - 1;
  while (rd >= 0 && rem[rd] == 0) --rd;
  if (rd < dd) return {IntPoly(), *this};
  std::vector<Int> quot(static_cast<size_t>(rd - dd) + 1, Int(0));
  for (int k = rd - dd; k >= 0; --k) {
    Int num = rem[static_cast<size_t>(k + dd)];
    if (num == 0) continue;
    if (num % lead != 0) {
      // not exactly divisible at this step: leave the remainder as is
      break;
    }
    Int q = num / lead;
    quot[static_cast<size_t>(k)] = q;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<size_t>(k + i)] -= q * d.c_[static_cast<size_t>(i)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
  if (!(q * d == *this)) throw std::domain_error("divide_exact: inexact division");
  return q;
}

bool IntPoly::divides(const IntPoly& d) const {
  if (d.is_zero()) return false;
  auto [q, r] = divmod(d);
  return r.is_zero() && q * d == *this;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = IntPoly::one();
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
  return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
  Int acc{0};
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc{0};
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
  return acc;
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> c(c_.rbegin(), c_.rend());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::reflected() const {
  std::vector<Int> c = c_;
  const int d = degree();
  for (int i = 0; i <= d; ++i)
    if ((d - i) % 2 != 0) c[static_cast<size_t>(i)] = -c[static_cast<size_t>(i)];
  return IntPoly(std::move(c));
}

bool IntPoly::is_self_reciprocal() const {
  if (is_zero()) return false;
  for (size_t i = 0, j = c_.size() - 1; i < j; ++i, --j)
    if (c_[i] != c_[j]) return false;
  return true;
}

Int IntPoly::content() const {
  Int g{0};
  for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (c_.back() < 0) g = -g;
  std::vector<Int> c(c_);
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int mag = a < 0 ? Int(-a) : a;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  // Euclid with pseudo-division, primitive parts at each step
  if (a.is_zero()) return b.is_zero() ? b : b.primitive();
  if (b.is_zero()) return a.primitive();
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    int da = a.degree(), db = b.degree();
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    Int scale = boost::multiprecision::pow(b.leading(), static_cast<unsigned>(da - db + 1));
    IntPoly r = (a * scale).divmod(b).second;
    a = b;
    b = r.is_zero() ? r : r.primitive();
  }
  return a.primitive();
}

bool is_squarefree(const IntPoly& p) {
  return poly_gcd(p, p.derivative()).degree() <= 0;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p.primitive();
  return p.divide_exact(g).primitive();
}

}  // namespace coxlab
