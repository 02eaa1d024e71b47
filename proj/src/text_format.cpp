#include "mpg/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "mpg/error.hpp"

namespace mpg {

namespace {

// Whitespace tokenizer that skips '#' comments.
class TokenStream {
 public:
  explicit TokenStream(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string tok;
    char c = 0;
    while (in_.get(c)) {
      if (c == '#') {
        std::string rest;
        std::getline(in_, rest);
        if (!tok.empty()) return tok;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!tok.empty()) return tok;
        continue;
      }
      tok.push_back(c);
    }
    if (!tok.empty()) return tok;
    return std::nullopt;
  }

 private:
  std::istream& in_;
};

int to_int(const std::string& tok) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'", {{"token", tok}});
  }
  return value;
}

}  // namespace

std::optional<Mpg> read_instance(std::istream& in) {
  TokenStream tokens(in);
  auto head = tokens.next();
  if (!head) return std::nullopt;
  const int m = to_int(*head);
  if (m < 3) {
    throw Error(ErrorCode::TooSmall, "m must be at least 3", {{"m", m}});
  }
  std::vector<int> sigma;
  sigma.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto tok = tokens.next();
    if (!tok) {
      throw Error(ErrorCode::LengthMismatch, "instance truncated",
                  {{"m", m}, {"length", sigma.size()}});
    }
    sigma.push_back(to_int(*tok));
  }
  return Mpg::validate(m, sigma);
}

Mpg parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto g = read_instance(in);
  if (!g) throw Error(ErrorCode::ParseError, "empty input");
  return *g;
}

std::vector<Mpg> parse_instances(std::istream& in) {
  std::vector<Mpg> out;
  while (auto g = read_instance(in)) out.push_back(std::move(*g));
  return out;
}

std::string format_instance(const Mpg& g) {
  std::ostringstream os;
  os << g.m() << '\n';
  for (int i = 0; i < g.m(); ++i) {
    if (i) os << ' ';
    os << g.sigma(i);
  }
  os << '\n';
  return os.str();
}

namespace fixtures {
Mpg prism() { return Mpg::validate(3, {0, 1, 2}); }
Mpg petersen() { return Mpg::validate(5, {0, 2, 4, 1, 3}); }
}  // namespace fixtures

}  // namespace mpg
