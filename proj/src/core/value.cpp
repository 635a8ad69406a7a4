#include "vforge/value.hpp"

#include <stdexcept>

namespace vforge {

Value::Value(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {
  r_.canonicalize();
  s_.canonicalize();
}

Value Value::infinity() {
  Value v;
  v.inf_ = true;
  return v;
}

const Rational& Value::standard() const {
  if (inf_) throw std::domain_error("standard part of Infinity");
  return r_;
}

const Rational& Value::tau() const {
  if (inf_) throw std::domain_error("tau part of Infinity");
  return s_;
}

Value Value::scaled(const Rational& c) const {
  if (inf_) {
    if (c <= 0) throw std::domain_error("scaling Infinity by a non-positive number");
    return *this;
  }
  return Value(r_ * c, s_ * c);
}

Value operator+(const Value& a, const Value& b) {
  if (a.inf_ || b.inf_) return Value::infinity();
  return Value(a.r_ + b.r_, a.s_ + b.s_);
}

Value operator-(const Value& a, const Value& b) {
  if (b.inf_) throw std::domain_error("subtracting Infinity");
  if (a.inf_) return a;
  return Value(a.r_ - b.r_, a.s_ - b.s_);
}

Value operator-(const Value& a) {
  if (a.inf_) throw std::domain_error("negating Infinity");
  return Value(-a.r_, -a.s_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.r_ == b.r_ && a.s_ == b.s_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.inf_ || b.inf_) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.r_, b.r_);
  if (c == 0) c = cmp(a.s_, b.s_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::string render(const Rational& r, const Rational& s, const char* tau_sep) {
  if (s == 0) return r.get_str();
  std::string ts = Rational(abs(s)).get_str() + tau_sep + "t";
  if (r == 0) return (s < 0 ? "-" : "") + ts;
  return r.get_str() + (s < 0 ? " - " : " + ") + ts;
}

}  // namespace

std::string Value::str() const { return inf_ ? "inf" : render(r_, s_, ""); }

std::string Value::file_str() const { return inf_ ? "inf" : render(r_, s_, " "); }

Value min(const Value& a, const Value& b) { return b < a ? b : a; }
Value max(const Value& a, const Value& b) { return a < b ? b : a; }

}  // namespace vforge
