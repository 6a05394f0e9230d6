#include "tubecc/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "tubecc/error.hpp"

namespace tubecc {

namespace {

class Parser {
public:
    Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

    TubeModule parse() {
        std::vector<Indec> summands;
        term(summands);
        skip_space();
        while (pos_ < text_.size() && text_[pos_] == '+') {
            ++pos_;
            term(summands);
            skip_space();
        }
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
        return TubeModule(rank_, std::move(summands));
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    long long integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError(start, "expected an integer");
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
        if (ec != std::errc() || value > std::numeric_limits<int>::max()) {
            throw ParseError(start, "integer out of range");
        }
        return text_[start] == '-' ? -value : value;
    }

    void term(std::vector<Indec>& out) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of expression");
        if (text_[pos_] == '0') {
            ++pos_;
            return;
        }
        if (text_[pos_] != 'E') throw ParseError(pos_, "expected '0' or 'E(i,n)'");
        ++pos_;
        expect('(');
        const long long socle = integer();
        expect(',');
        const std::size_t length_pos = pos_;
        const long long length = integer();
        expect(')');
        if (length < 1) throw ParseError(length_pos, "length must be at least 1");
        out.push_back(Indec{static_cast<int>(socle), static_cast<int>(length)});
    }

    std::string_view text_;
    int rank_;
    std::size_t pos_ = 0;
};

}  // namespace

TubeModule parse_module(std::string_view text, int rank) {
    if (rank < 1) fail(ErrorKind::validation, "rank must be positive");
    return Parser(text, rank).parse();
}

}  // namespace tubecc
