#include "baileykit/laurent_x.hpp"

#include <algorithm>

namespace baileykit {

void LaurentPolyX::add(long xexp, const TSeries& c) {
  auto it = terms_.find(xexp);
  if (it == terms_.end()) {
    if (!c.is_zero() || !c.is_exact()) terms_.emplace(xexp, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero() && it->second.is_exact()) terms_.erase(it);
}

TSeries LaurentPolyX::coeff(long xexp) const {
  auto it = terms_.find(xexp);
  return it == terms_.end() ? TSeries() : it->second;
}

long LaurentPolyX::order() const {
  long o = kExactOrder;
  for (const auto& [e, c] : terms_) o = std::min(o, c.order());
  return o;
}

LaurentPolyX LaurentPolyX::truncated(long order) const {
  LaurentPolyX out;
  for (const auto& [e, c] : terms_) out.add(e, c.truncated(order));
  return out;
}

LaurentPolyX LaurentPolyX::scaled(const TSeries& c) const {
  LaurentPolyX out;
  for (const auto& [e, v] : terms_) out.add(e, v * c);
  return out;
}

LaurentPolyX& LaurentPolyX::operator+=(const LaurentPolyX& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

std::string LaurentPolyX::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*x^" + std::to_string(e);
  }
  return out;
}

}  // namespace baileykit
