#include "lenfact/parse.hpp"

#include <cctype>
#include <cstdint>

namespace lenfact {

namespace {

constexpr int kMaxExponent = 100000;

class Scanner {
  public:
    Scanner(const RingHandle& ring, const std::string& s) : ring_(ring), s_(s) {}

    Poly parse() {
        Poly acc = Poly::zero(ring_);
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool negate = take_sign(false);
        for (;;) {
            const Poly term = parse_term();
            acc = negate ? acc - term : acc + term;
            skip_ws();
            if (at_end()) return acc;
            negate = take_sign(true);
        }
    }

  private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Consumes '+'/'-'; when required, anything else is an error.
    bool take_sign(bool required) {
        skip_ws();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            const bool neg = peek() == '-';
            ++pos_;
            return neg;
        }
        if (required) throw ParseError("expected '+' or '-'", pos_);
        return false;
    }

    std::uint64_t parse_number() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", pos_);
        std::uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > (1ull << 62)) throw ParseError("number too large", pos_);
            ++pos_;
        }
        return value;
    }

    Elem parse_bracket() {
        const std::size_t start = pos_;
        ++pos_;  // '['
        if (ring_->family() != RingFamily::split)
            throw DomainError(Errc::ring_mismatch, "bracket literals require a SPLIT ring");
        const std::uint64_t q = ring_->residue_card();
        const std::uint64_t r = parse_number();
        if (r >= q) throw ParseError("unit component out of range", start);
        skip_ws();
        if (at_end() || peek() != ';') throw ParseError("expected ';'", pos_);
        ++pos_;
        std::vector<FElem> ideal;
        for (;;) {
            const std::uint64_t v = parse_number();
            if (v >= q) throw ParseError("ideal component out of range", start);
            ideal.push_back(static_cast<FElem>(v));
            skip_ws();
            if (!at_end() && peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        if (at_end() || peek() != ']') throw ParseError("expected ']'", pos_);
        ++pos_;
        if (ideal.size() != ring_->k())
            throw ParseError("expected " + std::to_string(ring_->k()) + " ideal components", start);
        return ring_->make_split_elem(static_cast<FElem>(r), ideal);
    }

    // x, x^d
    int parse_xpart() {
        ++pos_;  // 'x'
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            const std::uint64_t d = parse_number();
            if (d > kMaxExponent) throw ParseError("exponent too large", pos_);
            return static_cast<int>(d);
        }
        return 1;
    }

    Poly parse_term() {
        skip_ws();
        if (at_end()) throw ParseError("expected a term", pos_);
        if (peek() == 'x') return Poly::x_pow(ring_, parse_xpart());

        Elem c;
        if (peek() == '[')
            c = parse_bracket();
        else
            c = ring_->from_int(static_cast<std::int64_t>(parse_number()));

        skip_ws();
        int degree = 0;
        if (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
            degree = parse_xpart();
        }
        std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1, 0);
        coeffs.back() = c;
        return Poly(ring_, std::move(coeffs));
    }

    RingHandle ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingHandle& ring, const std::string& literal) {
    return Scanner(ring, literal).parse();
}

}  // namespace lenfact
