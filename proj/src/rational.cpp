#include "krcyclo/rational.hpp"

#include <stdexcept>

namespace krcyclo {

QQ parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return QQ(ZZ(text));
    const ZZ num(text.substr(0, slash));
    const ZZ den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    // Division canonicalizes (lowest terms, positive denominator).
    return QQ(num) / QQ(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational literal: \"" + text + "\"");
  }
}

std::string to_string(const QQ& value) { return value.str(); }

} // namespace krcyclo
