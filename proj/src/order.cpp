#include "renyi/order.hpp"

#include <charconv>
#include <cstdlib>

namespace renyi {

Order Order::parse(std::string_view s) {
  if (s == "inf" || s == "infinity" || s == "Inf" || s == "Infinity") return infinity();
  std::string buf(s);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0') {
    throw unsupported_order_error("cannot parse order '" + buf + "'");
  }
  return from_value(v);
}

std::string Order::to_string() const {
  switch (kind_) {
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::Infinity:
      return "inf";
    case Kind::Finite:
      break;
  }
  std::string s = std::to_string(alpha_);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace renyi
