#pragma once

#include <string>

#include "entrolab/error.hpp"

namespace entrolab {

// Entropy order. The limits at 1 and infinity (and the rank functional at 0)
// are exact tagged symbols with their own code paths; they are never detected
// by closeness of a floating-point value to 1.
class Order {
 public:
  enum class Kind { Zero, One, Real, Infinity };

  static Order zero() { return Order(Kind::Zero, 0.0); }
  static Order one() { return Order(Kind::One, 1.0); }
  static Order infinity() { return Order(Kind::Infinity, 0.0); }

  // A real payload of exactly 0 or 1 canonicalizes to the tagged symbol.
  static Order real(double r);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_one() const { return kind_ == Kind::One; }
  bool is_real() const { return kind_ == Kind::Real; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }

  // Real payload; One maps to 1.0 for convenience in closed-form formulas
  // that are continuous there. Zero/Infinity have no numeric value.
  double value() const;

  // Interval membership helpers used for threshold dispatch. Infinity
  // compares greater than any real.
  bool less_than(double r) const;
  bool at_most(double r) const { return less_than(r) || equals(r); }
  bool equals(double r) const;

  std::string str() const;
  static Order parse(const std::string& text);

  bool operator==(const Order& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::Real || value_ == o.value_);
  }

 private:
  Order(Kind k, double v) : kind_(k), value_(v) {}
  Kind kind_;
  double value_;
};

}  // namespace entrolab
