#include <cstdlib>
#include <string>

#include "arr/config.hpp"
#include "arr/error.hpp"
#include "arr/exactmath.hpp"

namespace arr {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw PreconditionError("empty rational literal");
  Rational value;
  if (value.set_str(s, 10) != 0) throw PreconditionError("malformed rational literal '" + s + "'");
  if (value.get_den() == 0) throw PreconditionError("zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer to_integer(const Rational& value) {
  if (value.get_den() != 1) throw PreconditionError("expected an integer, got " + to_string(value));
  return value.get_num();
}

unsigned threads_from_environment() {
  if (const char* env = std::getenv("ARR_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace arr
