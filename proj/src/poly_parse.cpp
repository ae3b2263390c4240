#include "phinewton/poly_parse.hpp"

#include <cctype>
#include <map>

#include "phinewton/errors.hpp"

namespace phinewton {

namespace {

constexpr std::size_t kMaxExponent = 1'000'000;

// Cursor over the non-whitespace characters of the input, remembering the
// original byte offset of each so errors point into the user's text.
class Scanner {
 public:
  explicit Scanner(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
    end_offset_ = text.size();
  }

  bool done() const { return pos_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[pos_]; }
  char take() { return chars_[pos_++]; }
  std::size_t offset() const { return done() ? end_offset_ : offsets_[pos_]; }

  bool accept(char c) {
    if (peek() != c || done()) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string token = done() ? "<end>" : std::string(1, chars_[pos_]);
    throw ParseError(what, token, offset());
  }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out += take();
    return out;
  }

 private:
  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t pos_ = 0;
  std::size_t end_offset_ = 0;
};

IntPoly parse_bracket_list(Scanner& s) {
  std::vector<Integer> coeffs;
  if (s.accept(']')) {
    if (!s.done()) s.fail("unexpected trailing input");
    return {};
  }
  while (true) {
    bool negative = false;
    if (s.accept('-')) {
      negative = true;
    } else {
      s.accept('+');
    }
    const std::string d = s.digits();
    if (d.empty()) s.fail("expected integer coefficient");
    Integer c(d, 10);
    coeffs.push_back(negative ? Integer(-c) : c);
    if (s.accept(',')) continue;
    if (s.accept(']')) break;
    s.fail("expected ',' or ']'");
  }
  if (!s.done()) s.fail("unexpected trailing input");
  return IntPoly(std::move(coeffs));
}

IntPoly parse_sum(Scanner& s) {
  std::map<std::size_t, Integer> terms;
  bool first = true;
  while (true) {
    bool negative = false;
    if (s.accept('-')) {
      negative = true;
    } else if (s.accept('+')) {
    } else if (!first) {
      s.fail("expected '+' or '-'");
    }
    if (s.done()) s.fail("expected term");

    Integer coeff = 1;
    std::size_t exponent = 0;
    const std::string d = s.digits();
    const bool has_coeff = !d.empty();
    if (has_coeff) coeff = Integer(d, 10);
    const bool star = s.accept('*');
    if (star && s.peek() != 'x') s.fail("expected 'x' after '*'");
    if (s.accept('x')) {
      exponent = 1;
      if (s.accept('^')) {
        const std::size_t at = s.offset();
        const std::string e = s.digits();
        if (e.empty()) s.fail("expected nonnegative exponent after '^'");
        if (e.size() > 7 || std::stoul(e) > kMaxExponent) throw ParseError("exponent too large", e, at);
        exponent = std::stoul(e);
      }
    } else if (!has_coeff) {
      s.fail("expected coefficient or 'x'");
    }
    if (negative) coeff = -coeff;
    terms[exponent] += coeff;
    first = false;
    if (s.done()) break;
    if (s.peek() != '+' && s.peek() != '-') s.fail("unexpected character");
  }
  std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
  std::vector<Integer> coeffs(top + 1);
  for (auto& [e, c] : terms) coeffs[e] = std::move(c);
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
  Scanner s(text);
  if (s.done()) s.fail("empty polynomial");
  if (s.accept('[')) return parse_bracket_list(s);
  return parse_sum(s);
}

}  // namespace phinewton
