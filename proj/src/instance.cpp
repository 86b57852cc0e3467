#include "baileykit/instance.hpp"

#include <cctype>
#include <set>

#include "baileykit/errors.hpp"

namespace baileykit {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class ValueParser {
 public:
  ValueParser(std::string_view text, std::size_t line, std::size_t col0)
      : s_(text), line_(line), col0_(col0) {}

  Monomial parse() {
    if (s_ == "inf") return Monomial::infinity();
    Integer sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    bool have_rational = false;
    Rational coeff = 1;
    if (is_digit(peek())) {
      Integer num = digits("digits");
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        den = digits("a positive denominator");
        if (den == 0) fail(pos_ - 1, "denominator must be positive");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      have_rational = true;
    }
    long texp = 0;
    bool have_q = false;
    if (peek() == 'q') {
      ++pos_;
      have_q = true;
      texp = 2;
      if (peek() == '^') {
        ++pos_;
        texp = exponent();
      }
    }
    if (!have_rational && !have_q) fail(pos_, "expected a rational, q, or inf");
    if (pos_ != s_.size()) fail(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return Monomial(Rational(sign) * coeff, texp);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    throw ParseError(line_, col0_ + at, what);
  }

  Integer digits(const char* what) {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (pos_ == start) fail(pos_, std::string("expected ") + what);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  long small_int() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    Integer v = digits("an integer exponent");
    if (!v.fits_slong_p() || v > 1000000000) fail(start, "exponent out of range");
    return neg ? -v.get_si() : v.get_si();
  }

  long exponent() {
    if (peek() == '(') {
      ++pos_;
      const long n = small_int();
      if (s_.substr(pos_, 3) != "/2)") fail(pos_, "expected \"/2)\"");
      pos_ += 3;
      return n;
    }
    return 2 * small_int();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
};

Monomial parse_value_at(std::string_view text, std::size_t line, std::size_t col0) {
  return ValueParser(text, line, col0).parse();
}

std::string where(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

}  // namespace

Monomial parse_value(std::string_view text) { return parse_value_at(text, 1, 1); }

IdentityInstance parse_instance(std::string_view text, std::size_t line_no) {
  const std::size_t hash = text.find('#');
  if (hash != std::string_view::npos) text = text.substr(0, hash);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip_ws();
  const std::size_t id_start = pos;
  while (pos < text.size() && !is_space(text[pos])) ++pos;
  if (pos == id_start) throw ParseError(line_no, id_start + 1, "expected an identity id");
  IdentityInstance inst;
  inst.id = std::string(text.substr(id_start, pos - id_start));
  for (char c : inst.id) {
    if (!(std::isupper(static_cast<unsigned char>(c)) || is_digit(c) || c == '_')) {
      throw ParseError(line_no, id_start + 1, "identity ids use A-Z, 0-9 and _");
    }
  }
  const IdentityDef* def = nullptr;
  try {
    def = &find_identity(inst.id);
  } catch (const UnknownIdentity& e) {
    throw UnknownIdentity(where(line_no, id_start + 1) + e.what());
  }

  bool order_set = false;
  std::set<std::string> seen;
  while (true) {
    const std::size_t before = pos;
    skip_ws();
    if (pos >= text.size()) break;
    if (pos == before) throw ParseError(line_no, pos + 1, "expected whitespace");
    const std::size_t tok_start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    const std::string_view tok = text.substr(tok_start, pos - tok_start);
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, tok_start + 1, "expected name=value");
    const std::string name(tok.substr(0, eq));
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
      throw ParseError(line_no, tok_start + 1, "parameter names start with a lowercase letter");
    }
    for (char c : name) {
      if (!(std::islower(static_cast<unsigned char>(c)) || is_digit(c) || c == '_')) {
        throw ParseError(line_no, tok_start + 1, "bad character in parameter name");
      }
    }
    if (!seen.insert(name).second) throw ParseError(line_no, tok_start + 1, name + " is bound twice");
    const std::size_t value_col = tok_start + eq + 2;
    const Monomial value = parse_value_at(tok.substr(eq + 1), line_no, value_col);
    if (name == "order") {
      if (value.is_infinite() || value.texp() != 0 || value.coeff().get_den() != 1 ||
          value.coeff() < 0 || !value.coeff().get_num().fits_slong_p()) {
        throw ParseError(line_no, value_col, "order must be a nonnegative integer");
      }
      inst.order = value.coeff().get_num().get_si();
      order_set = true;
      continue;
    }
    bool known = false;
    for (const auto& s : def->params) known = known || s.name == name;
    if (!known) {
      throw UnknownParameter(where(line_no, tok_start + 1) + inst.id + " has no parameter " + name);
    }
    inst.bindings.emplace_back(name, value);
  }
  if (!order_set) inst.order = default_order();
  try {
    resolve_params(inst);
  } catch (const ConstraintViolation& e) {
    throw ConstraintViolation(where(line_no, id_start + 1) + e.what());
  }
  return inst;
}

InstanceFile parse_instances(std::string_view text) {
  InstanceFile file;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::string_view body = line.substr(0, line.find('#'));
    bool blank = true;
    for (char c : body) blank = blank && is_space(c);
    if (!blank) file.lines.push_back({line_no, parse_instance(line, line_no)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return file;
}

std::string serialize(const IdentityInstance& inst) {
  std::string out = inst.id;
  for (const auto& [name, value] : inst.bindings) out += " " + name + "=" + value.to_string();
  out += " order=" + std::to_string(inst.order);
  return out;
}

std::string serialize(const InstanceFile& file) {
  std::string out;
  for (const auto& l : file.lines) out += serialize(l.instance) + "\n";
  return out;
}

}  // namespace baileykit
