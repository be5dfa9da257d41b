#include "tsf/polyform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsf {

PolyForm::PolyForm(int n, int k) : n_(n), k_(k) {
  if (n < 0) throw std::invalid_argument("PolyForm: n < 0");
}

PolyForm PolyForm::monomial(int n, const MultiIndex& alpha,
                            const IndexSet& sigma, const Rational& coeff) {
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("PolyForm::monomial: alpha length != n");
  PolyForm out(n, static_cast<int>(sigma.size()));
  if (coeff == 0) return out;
  for (int i : sigma)
    if (i < 1 || i > n)
      throw std::invalid_argument("PolyForm::monomial: sigma index out of range");

  // Sort sigma by counting inversions; a repeated index kills the term.
  IndexSet s = sigma;
  int inversions = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return out;
      if (s[i] > s[j]) ++inversions;
    }
  std::sort(s.begin(), s.end());
  Rational c = coeff;
  if (inversions % 2 != 0) c = -c;
  out.add_term(alpha, s, c);
  return out;
}

void PolyForm::add_term(const MultiIndex& alpha, const IndexSet& sigma,
                        const Rational& coeff) {
  if (coeff == 0) return;
  TermKey key{alpha, sigma};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& other) {
  if (n_ != other.n_ || (k_ != other.k_ && !other.is_zero() && !is_zero()))
    throw std::invalid_argument("PolyForm: +- on mismatched (n,k)");
  if (is_zero()) k_ = other.k_;
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& other) {
  if (n_ != other.n_ || (k_ != other.k_ && !other.is_zero() && !is_zero()))
    throw std::invalid_argument("PolyForm: +- on mismatched (n,k)");
  if (is_zero()) k_ = other.k_;
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [key, v] : terms_) v *= c;
  }
  return *this;
}

bool PolyForm::operator==(const PolyForm& other) const {
  if (n_ != other.n_) return false;
  if (is_zero() && other.is_zero()) return true;
  return k_ == other.k_ && terms_ == other.terms_;
}

PolyForm exterior_derivative(const PolyForm& w) {
  PolyForm out(w.n(), w.k() + 1);
  for (const auto& [key, c] : w.terms()) {
    const auto& [alpha, sigma] = key;
    for (int i = 1; i <= w.n(); ++i) {
      if (alpha[i - 1] == 0) continue;
      if (std::binary_search(sigma.begin(), sigma.end(), i)) continue;
      MultiIndex a = alpha;
      a[i - 1] -= 1;
      // dx_i ^ dx_sigma: sign from moving dx_i past the entries below i.
      int pos = static_cast<int>(
          std::lower_bound(sigma.begin(), sigma.end(), i) - sigma.begin());
      IndexSet s = sigma;
      s.insert(s.begin() + pos, i);
      Rational coeff = c * alpha[i - 1];
      if (pos % 2 != 0) coeff = -coeff;
      out.add_term(a, s, coeff);
    }
  }
  return out;
}

PolyForm koszul(const PolyForm& w) {
  PolyForm out(w.n(), w.k() - 1);
  for (const auto& [key, c] : w.terms()) {
    const auto& [alpha, sigma] = key;
    for (size_t i = 0; i < sigma.size(); ++i) {
      MultiIndex a = alpha;
      a[sigma[i] - 1] += 1;
      IndexSet s = sigma;
      s.erase(s.begin() + i);
      Rational coeff = c;
      if (i % 2 != 0) coeff = -coeff;
      out.add_term(a, s, coeff);
    }
  }
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: mismatched n");
  PolyForm out(a.n(), a.k() + b.k());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const IndexSet& sa = ka.second;
      const IndexSet& sb = kb.second;
      // Merge sigma's; repeated index kills the term, inversions give sign.
      bool dead = false;
      for (int i : sb)
        if (std::binary_search(sa.begin(), sa.end(), i)) {
          dead = true;
          break;
        }
      if (dead) continue;
      int inversions = 0;
      for (int i : sa)
        for (int j : sb)
          if (i > j) ++inversions;
      IndexSet s;
      s.reserve(sa.size() + sb.size());
      std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(),
                 std::back_inserter(s));
      MultiIndex alpha(a.n());
      for (int i = 0; i < a.n(); ++i) alpha[i] = ka.first[i] + kb.first[i];
      Rational c = ca * cb;
      if (inversions % 2 != 0) c = -c;
      out.add_term(alpha, s, c);
    }
  }
  return out;
}

PolyForm trace(const PolyForm& w, int axis, const Rational& c) {
  if (axis < 1 || axis > w.n())
    throw std::invalid_argument("trace: axis out of range");
  PolyForm out(w.n() - 1, w.k());
  for (const auto& [key, coeff] : w.terms()) {
    const auto& [alpha, sigma] = key;
    if (std::binary_search(sigma.begin(), sigma.end(), axis)) continue;
    Rational v = coeff * rational_pow(c, alpha[axis - 1]);
    if (v == 0) continue;
    MultiIndex a;
    a.reserve(alpha.size() - 1);
    for (int i = 1; i <= w.n(); ++i)
      if (i != axis) a.push_back(alpha[i - 1]);
    IndexSet s;
    s.reserve(sigma.size());
    for (int i : sigma) s.push_back(i > axis ? i - 1 : i);
    out.add_term(a, s, v);
  }
  return out;
}

PolyForm partial(const PolyForm& w, int axis) {
  if (axis < 1 || axis > w.n())
    throw std::invalid_argument("partial: axis out of range");
  PolyForm out(w.n(), w.k());
  for (const auto& [key, c] : w.terms()) {
    if (key.first[axis - 1] == 0) continue;
    MultiIndex a = key.first;
    a[axis - 1] -= 1;
    out.add_term(a, key.second, c * key.first[axis - 1]);
  }
  return out;
}

int linear_degree(const MultiIndex& alpha, const IndexSet& sigma) {
  int count = 0;
  for (int i = 1; i <= static_cast<int>(alpha.size()); ++i)
    if (alpha[i - 1] == 1 &&
        !std::binary_search(sigma.begin(), sigma.end(), i))
      ++count;
  return count;
}

int linear_degree(const PolyForm& w) {
  if (w.is_zero())
    throw std::domain_error("linear_degree: undefined on the zero form");
  int best = -1;
  for (const auto& [key, c] : w.terms()) {
    int l = linear_degree(key.first, key.second);
    if (best < 0 || l < best) best = l;
  }
  return best;
}

PolyForm homogeneous_component(const PolyForm& w, int r) {
  PolyForm out(w.n(), w.k());
  for (const auto& [key, c] : w.terms())
    if (degree(key.first) == r) out.add_term(key.first, key.second, c);
  return out;
}

int max_degree(const PolyForm& w) {
  int best = -1;
  for (const auto& [key, c] : w.terms())
    best = std::max(best, degree(key.first));
  return best;
}

std::string to_string(const PolyForm& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : w.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    for (int i = 1; i <= w.n(); ++i) {
      int e = key.first[i - 1];
      if (e == 0) continue;
      os << " x" << i;
      if (e > 1) os << "^" << e;
    }
    if (!key.second.empty()) {
      os << " ";
      for (size_t i = 0; i < key.second.size(); ++i) {
        if (i > 0) os << "^";
        os << "dx" << key.second[i];
      }
    }
  }
  return os.str();
}

}  // namespace tsf
