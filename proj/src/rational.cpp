#include "latval/rational.hpp"

#include "latval/errors.hpp"

#include <limits>

namespace latval {

std::string to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InvalidArgument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("integer " + z.get_str() + " does not fit in 64 bits");
  return z.get_si();
}

IntVec to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw InvalidArgument("coordinate " + to_string(x) + " is not an integer");
    out.push_back(to_int64(x.get_num()));
  }
  return out;
}

double to_double(const Rat& q) { return q.get_d(); }

std::vector<double> to_double(const RatVec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat norm2(const RatVec& a) { return dot(a, a); }

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const RatVec& a, const Rat& s) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RatVec primitive(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  Int g = 0;
  std::vector<Int> num;
  num.reserve(v.size());
  for (const auto& x : v) {
    Int n = x.get_num() * (den / x.get_den());
    g = gcd(g, n);
    num.push_back(std::move(n));
  }
  RatVec out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(num[i] / g);
  return out;
}

}  // namespace latval
