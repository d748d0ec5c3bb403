#include "gaussmap/parse.hpp"

#include <cctype>

#include "gaussmap/errors.hpp"

namespace gaussmap {

namespace {

class PolyParser {
public:
  PolyParser(const std::string& text, const std::string& var)
      : text_(text), var_(var) {}

  UniPoly parse() {
    UniPoly acc;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    int sign = consume_sign() ? -1 : 1;
    for (;;) {
      acc += term(sign);
      skip_ws();
      if (at_end()) return acc;
      char c = text_[pos_];
      if (c == '+') {
        sign = 1;
      } else if (c == '-') {
        sign = -1;
      } else {
        throw ParseError("expected '+' or '-'", pos_);
      }
      ++pos_;
      skip_ws();
    }
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  /// Consumes one optional leading sign; true when it was '-'.
  bool consume_sign() {
    if (at_end()) return false;
    if (text_[pos_] == '-' || text_[pos_] == '+') {
      bool neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  bool at_var() const {
    return text_.compare(pos_, var_.size(), var_) == 0;
  }

  Integer digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected digits", pos_);
    }
    std::size_t start = pos_;
    while (!at_end() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return Integer(text_.substr(start, pos_ - start));
  }

  std::size_t exponent() {
    Integer e = digits();
    if (e > 4096) throw ParseError("exponent too large", pos_ - 1);
    return static_cast<std::size_t>(e.get_ui());
  }

  UniPoly term(int sign) {
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);
    Rational coeff = sign;
    bool saw_coeff = false;
    char c = text_[pos_];
    if (c == '-' || c == '+' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      if (consume_sign()) coeff = -coeff;
      Integer num = digits();
      Integer den = 1;
      skip_ws();
      if (!at_end() && text_[pos_] == '/') {
        std::size_t slash = pos_;
        ++pos_;
        skip_ws();
        den = digits();
        if (den == 0) throw ParseError("zero denominator", slash + 1);
      }
      Rational q(num, den);
      q.canonicalize();
      coeff *= q;
      saw_coeff = true;
      skip_ws();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!at_var()) throw ParseError("expected '" + var_ + "'", pos_);
      }
    }
    if (!at_end() && at_var()) {
      pos_ += var_.size();
      std::size_t deg = 1;
      skip_ws();
      if (!at_end() && text_[pos_] == '^') {
        ++pos_;
        skip_ws();
        deg = exponent();
      }
      return UniPoly::monomial(deg, coeff);
    }
    if (!saw_coeff) throw ParseError("expected a term", pos_);
    return UniPoly::constant(coeff);
  }

  const std::string& text_;
  const std::string& var_;
  std::size_t pos_ = 0;
};

}  // namespace

UniPoly parse_poly(const std::string& text, const std::string& var) {
  PolyParser parser(text, var);
  return parser.parse();
}

}  // namespace gaussmap
