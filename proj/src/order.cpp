#include "entrolab/order.hpp"

#include <cmath>
#include <cstdio>

namespace entrolab {

Order Order::real(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error("order must be finite and nonnegative");
  }
  if (r == 0.0) return zero();
  if (r == 1.0) return one();
  return Order(Kind::Real, r);
}

double Order::value() const {
  switch (kind_) {
    case Kind::One:
      return 1.0;
    case Kind::Real:
      return value_;
    default:
      throw Error("order " + str() + " has no real payload");
  }
}

bool Order::less_than(double r) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0 < r;
    case Kind::One:
      return 1.0 < r;
    case Kind::Real:
      return value_ < r;
    case Kind::Infinity:
      return false;
  }
  return false;
}

bool Order::equals(double r) const {
  switch (kind_) {
    case Kind::Zero:
      return r == 0.0;
    case Kind::One:
      return r == 1.0;
    case Kind::Real:
      return value_ == r;
    case Kind::Infinity:
      return false;
  }
  return false;
}

std::string Order::str() const {
  switch (kind_) {
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::Infinity:
      return "inf";
    case Kind::Real: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", value_);
      return buf;
    }
  }
  return "?";
}

Order Order::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "1") return one();
  if (text == "inf" || text == "infinity") return infinity();
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == nullptr || *end != '\0' || text.empty()) {
    throw Error("cannot parse order '" + text + "'");
  }
  return real(v);
}

}  // namespace entrolab
