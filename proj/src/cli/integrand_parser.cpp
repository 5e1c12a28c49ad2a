#include "hilb/integrand_parser.hpp"

#include <string>
#include <vector>

#include "hilb/errors.hpp"

namespace hilb {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IntegrandSpec parse() {
    IntegrandSpec spec;
    bool have_segre = false;
    term(spec, have_segre);
    while (true) {
      skip_space();
      if (at_end()) break;
      if (!consume("*")) fail({"'*'", "end of input"});
      term(spec, have_segre);
    }
    return spec;
  }

 private:
  void term(IntegrandSpec& spec, bool& have_segre) {
    skip_space();
    const std::size_t start = pos_;
    if (consume("c1(L)")) {
      int power = 1;
      skip_space();
      if (consume("^")) {
        skip_space();
        power = integer();
      }
      spec.i += power;
      return;
    }
    if (consume("s")) {
      const int index = integer();
      skip_space();
      if (!consume("(E*L)")) fail({"'(E*L)'"});
      if (have_segre) {
        throw ParseError(start, {"'c1(L)'"},
                         "parse error at offset " + std::to_string(start) +
                             ": at most one Segre factor s<k>(E*L) is allowed");
      }
      have_segre = true;
      spec.k = index;
      return;
    }
    fail({"'c1(L)'", "'s'"});
  }

  int integer() {
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) {
        throw ParseError(start, {"integer"},
                         "parse error at offset " + std::to_string(start) + ": integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail({"integer"});
    return static_cast<int>(value);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string message = "parse error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (j) message += j + 1 == expected.size() ? " or " : ", ";
      message += expected[j];
    }
    message += at_end() ? ", found end of input"
                        : ", found '" + std::string(1, text_[pos_]) + "'";
    throw ParseError(pos_, std::move(expected), message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntegrandSpec parse_integrand(std::string_view text) { return Parser(text).parse(); }

}  // namespace hilb
