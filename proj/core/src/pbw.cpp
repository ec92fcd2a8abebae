#include "locind/pbw.hpp"

#include <sstream>

namespace locind {

ExactScalar UElt::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

void UElt::add_term(const PBWMonomial& m, const ExactScalar& c) {
  if (c == 0) return;
  if (dim_ == 0) dim_ = m.size();
  if (m.size() != dim_) throw std::invalid_argument("PBW monomial has wrong length");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UElt UElt::operator+(const UElt& o) const {
  UElt r = *this;
  if (r.dim_ == 0) r.dim_ = o.dim_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

UElt UElt::operator-() const {
  UElt r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

UElt UElt::operator-(const UElt& o) const { return *this + (-o); }

UElt UElt::operator*(const ExactScalar& s) const {
  if (s == 0) return UElt(dim_);
  UElt r = *this;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

unsigned total_degree(const PBWMonomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

unsigned filtration_degree(const UElt& a) {
  unsigned d = 0;
  for (const auto& [m, c] : a.terms()) d = std::max(d, total_degree(m));
  return d;
}

Weight monomial_weight(const PBWMonomial& m, const std::vector<Weight>& adjoint_weights) {
  Weight w;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned k = 0; k < m[i]; ++k) w = w + adjoint_weights.at(i);
  return w;
}

// ---------------------------------------------------------------------------

UAlgebra::UAlgebra(LieAlgPtr g) : g_(std::move(g)) {}

UElt UAlgebra::one() const { return monomial(PBWMonomial(dim(), 0)); }

UElt UAlgebra::generator(std::size_t i) const {
  PBWMonomial m(dim(), 0);
  m.at(i) = 1;
  return monomial(m);
}

UElt UAlgebra::from_lie(const Vector& x) const {
  UElt r(dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) r = r + generator(i) * x[i];
  return r;
}

UElt UAlgebra::monomial(const PBWMonomial& m, const ExactScalar& c) const {
  if (m.size() != dim()) throw std::invalid_argument("PBW monomial has wrong length");
  UElt r(dim());
  r.add_term(m, c);
  return r;
}

const UElt& UAlgebra::gen_times(std::size_t i, const PBWMonomial& m) const {
  const auto key = std::make_pair(i, m);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  std::size_t j = 0;
  while (j < m.size() && m[j] == 0) ++j;
  UElt result(dim());
  if (j == m.size() || i <= j) {
    PBWMonomial n = m;
    ++n[i];
    result.add_term(n, 1);
  } else {
    // x_i x_j m' = x_j (x_i m') + [x_i, x_j] m'
    PBWMonomial rest = m;
    --rest[j];
    result = gen_times(j, gen_times(i, rest));
    const Vector& br = g_->bracket_basis(i, j);
    for (std::size_t k = 0; k < br.size(); ++k)
      if (br[k] != 0) result = result + gen_times(k, rest) * br[k];
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(key, std::make_shared<const UElt>(std::move(result)));
  return *it->second;
}

UElt UAlgebra::gen_times(std::size_t i, const UElt& a) const {
  UElt r(dim());
  for (const auto& [m, c] : a.terms()) r = r + gen_times(i, m) * c;
  return r;
}

UElt UAlgebra::word(const std::vector<std::size_t>& letters) const {
  UElt r = one();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r = gen_times(*it, r);
  return r;
}

UElt UAlgebra::mul(const UElt& a, const UElt& b) const {
  UElt r(dim());
  for (const auto& [m, c] : a.terms()) {
    UElt t = b;
    for (std::size_t i = m.size(); i-- > 0;)
      for (unsigned k = 0; k < m[i]; ++k) t = gen_times(i, t);
    r = r + t * c;
  }
  return r;
}

UElt UAlgebra::commutator(const UElt& a, const UElt& b) const { return mul(a, b) - mul(b, a); }

UElt UAlgebra::power(const UElt& a, unsigned n) const {
  UElt r = one();
  for (unsigned k = 0; k < n; ++k) r = mul(a, r);
  return r;
}

UElt UAlgebra::antipode(const UElt& a) const {
  UElt r(dim());
  for (const auto& [m, c] : a.terms()) {
    std::vector<std::size_t> letters;
    for (std::size_t i = m.size(); i-- > 0;)
      for (unsigned k = 0; k < m[i]; ++k) letters.push_back(i);
    r = r + word(letters) * ((letters.size() % 2 == 0) ? c : ExactScalar(-c));
  }
  return r;
}

std::vector<PBWMonomial> UAlgebra::monomials_up_to(unsigned p) const {
  std::vector<PBWMonomial> out;
  PBWMonomial cur(dim(), 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned budget) -> void {
    if (pos == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      cur[pos] = e;
      self(self, pos + 1, budget - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, p);
  return out;
}

std::string UAlgebra::to_string(const UElt& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const ExactScalar mag = abs(c);
    std::ostringstream mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (mono.tellp() > 0) mono << "*";
      mono << g_->label(i);
      if (m[i] > 1) mono << "^" << m[i];
    }
    const std::string ms = mono.str();
    if (ms.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << ms;
    else
      os << mag.get_str() << "*" << ms;
  }
  return os.str();
}

}  // namespace locind
