#include "lenfact/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lenfact/parse.hpp"

namespace lenfact {

using nlohmann::json;

std::vector<VerifyOutcome> verify_range(const RingHandle& ring, int n_max, int degree_guard) {
    if (n_max < 1) throw DomainError(Errc::bad_parameter, "n-max must be >= 1");
    const int guard = degree_guard > 0 ? degree_guard : default_brute_guard(*ring);
    if (n_max > guard)
        throw DomainError(Errc::limit_exceeded, "n-max " + std::to_string(n_max) +
                                                    " exceeds brute-force guard " + std::to_string(guard));
    std::vector<VerifyOutcome> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        LengthSet formula = length_set_formula(ring, n);
        LengthSet brute = length_set_bruteforce(Poly::x_pow(ring, n), guard);
        const bool equal = formula == brute;
        out.push_back(VerifyOutcome{n, std::move(formula), std::move(brute), equal});
    }
    return out;
}

int verify_exit_code(const std::vector<VerifyOutcome>& outcomes) {
    for (const auto& o : outcomes)
        if (!o.equal) return 3;
    return 0;
}

namespace {

struct RingFlags {
    std::string family;
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    std::uint32_t k = 1;
};

void add_common_options(CLI::App* cmd, RingFlags& rf, std::string& format) {
    cmd->add_option("--ring", rf.family, "ring family: zp2 or split")
        ->required()
        ->check(CLI::IsMember({"zp2", "split"}));
    cmd->add_option("--p", rf.p, "prime p")->required();
    cmd->add_option("--e", rf.e, "residue field extension degree (split only)");
    cmd->add_option("--k", rf.k, "ideal dimension over the residue field (split only)");
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
}

RingHandle build_ring(const RingFlags& rf) {
    return rf.family == "zp2" ? LocalRing::make_zp2(rf.p)
                              : LocalRing::make_split(rf.p, rf.e, rf.k);
}

json ring_json(const LocalRing& ring) {
    json j;
    if (ring.family() == RingFamily::zp2) {
        j["family"] = "zp2";
    } else {
        j["family"] = "split";
        j["e"] = ring.e();
        j["k"] = ring.k();
    }
    j["p"] = ring.p();
    j["q"] = ring.residue_card();
    j["cardR"] = ring.card();
    j["cardM"] = ring.card_m();
    return j;
}

std::string set_to_string(const LengthSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::size_t term_count(const Poly& f) {
    std::size_t n = 0;
    for (Elem c : f.coeffs())
        if (c != 0) ++n;
    return n;
}

std::string factor_product(const std::vector<Poly>& factors) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += " * ";
        const std::string r = render(factors[i]);
        out += term_count(factors[i]) > 1 ? "(" + r + ")" : r;
    }
    return out;
}

json factors_json(const std::vector<Poly>& factors) {
    json arr = json::array();
    for (const Poly& g : factors) arr.push_back(render(g));
    return arr;
}

/// What a subcommand handler produces; formatting happens uniformly after.
struct Outcome {
    json query;
    json result;
    std::string source;
    bool verified = false;
    int exit_code = 0;
    std::string table;
};

Outcome do_lengths(const RingHandle& ring, int n, bool verify, int guard) {
    Outcome o;
    const LengthSet formula = length_set_formula(ring, n);
    std::string note = "[formula]";
    if (verify) {
        const LengthSet brute = length_set_bruteforce(Poly::x_pow(ring, n), guard);
        o.verified = brute == formula;
        if (!o.verified) {
            o.exit_code = 3;
            note = "[formula, MISMATCH against brute force " + set_to_string(brute) + "]";
        } else {
            note = "[formula, verified against brute force]";
        }
    }
    o.query = {{"subcommand", "lengths"}, {"n", n}};
    o.result = {{"lengths", formula}};
    o.source = "formula";
    o.table = "L(x^" + std::to_string(n) + ") over " + ring->describe() + " = " +
              set_to_string(formula) + "  " + note + "\n";
    return o;
}

Outcome do_brute(const RingHandle& ring, const Poly& f, int guard) {
    Outcome o;
    const LengthSet lengths = length_set_bruteforce(f, guard);
    o.query = {{"subcommand", "brute"}, {"poly", render(f)}};
    o.result = {{"lengths", lengths}};
    o.source = "bruteforce";
    o.table = "L(" + render(f) + ") over " + ring->describe() + " = " + set_to_string(lengths) +
              "  [bruteforce]\n";
    return o;
}

Outcome do_factorizations(const RingHandle& ring, const Poly& f, int guard) {
    Outcome o;
    const auto fs = all_factorizations(f, guard);
    o.verified = std::all_of(fs.begin(), fs.end(), verify_factorization);
    json arr = json::array();
    for (const auto& fac : fs) arr.push_back(factors_json(fac.factors));
    o.query = {{"subcommand", "factorizations"}, {"poly", render(f)}};
    o.result = {{"count", fs.size()}, {"factorizations", arr}};
    o.source = "bruteforce";
    std::string t = render(f) + " over " + ring->describe() + ": " + std::to_string(fs.size()) +
                    " factorizations into irreducibles\n";
    for (const auto& fac : fs) t += "  " + factor_product(fac.factors) + "\n";
    o.table = t;
    return o;
}

Outcome do_witness(const RingHandle& ring, int n, int len) {
    Outcome o;
    const Factorization w = witness(ring, n, len);
    o.verified = true;
    o.query = {{"subcommand", "witness"}, {"n", n}, {"len", len}};
    o.result = {{"k", len}, {"factors", factors_json(w.factors)}};
    o.source = "formula";
    o.table = "x^" + std::to_string(n) + " over " + ring->describe() + " = " +
              factor_product(w.factors) + "  [k=" + std::to_string(len) + ", verified]\n";
    return o;
}

Outcome do_count_ge2(const RingHandle& ring) {
    Outcome o;
    const std::uint64_t count = count_irreducible_ge2(ring);
    const std::uint64_t expected = ring->card_m() * (ring->card_m() - 1);
    o.verified = count == expected;
    o.query = {{"subcommand", "count-ge2"}};
    o.result = {{"count", count}, {"expected", expected}};
    o.source = "bruteforce";
    o.table = "irreducible degree-2 GE polynomials over " + ring->describe() + ": " +
              std::to_string(count) + " (expected |m|*(|m|-1) = " + std::to_string(expected) + ")\n";
    return o;
}

Outcome do_verify(const RingHandle& ring, int n_max, int guard) {
    Outcome o;
    const auto outcomes = verify_range(ring, n_max, guard);
    o.exit_code = verify_exit_code(outcomes);
    o.verified = o.exit_code == 0;
    json arr = json::array();
    std::string t;
    for (const auto& oc : outcomes) {
        arr.push_back({{"n", oc.n}, {"formula", oc.formula}, {"bruteforce", oc.brute}, {"equal", oc.equal}});
        t += "n=" + std::to_string(oc.n) + ": " + set_to_string(oc.formula) +
             (oc.equal ? " == " : " != ") + set_to_string(oc.brute) + "\n";
    }
    t += "verify over " + ring->describe() + " for n = 1.." + std::to_string(n_max) + ": " +
         (o.verified ? "PASS" : "FAIL") + "\n";
    o.query = {{"subcommand", "verify"}, {"n_max", n_max}};
    o.result = {{"all_equal", o.verified}, {"n_max", n_max}, {"outcomes", arr}};
    o.source = "bruteforce";
    o.table = t;
    return o;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    std::ostringstream out, err;

    CLI::App app{"sets of lengths of polynomial factorizations over finite local rings with a square-zero maximal ideal"};
    app.require_subcommand(1);

    RingFlags rf;
    std::string format = "table";
    int n = 0, len = 0, n_max = 0, guard = 0;
    std::string poly_literal;
    bool verify_flag = false;

    auto* c_lengths = app.add_subcommand("lengths", "closed-form L(x^n)");
    add_common_options(c_lengths, rf, format);
    c_lengths->add_option("--n", n, "exponent of x^n")->required();
    c_lengths->add_flag("--verify", verify_flag, "cross-check against the brute-force enumerator");
    c_lengths->add_option("--guard", guard, "degree guard override for --verify");

    auto* c_brute = app.add_subcommand("brute", "brute-force L(f) for a monic polynomial");
    add_common_options(c_brute, rf, format);
    c_brute->add_option("--n", n, "shorthand for --poly x^n");
    c_brute->add_option("--poly", poly_literal, "polynomial literal");
    c_brute->add_option("--guard", guard, "degree guard override");

    auto* c_fact = app.add_subcommand("factorizations", "list every factorization into irreducibles");
    add_common_options(c_fact, rf, format);
    c_fact->add_option("--n", n, "shorthand for --poly x^n");
    c_fact->add_option("--poly", poly_literal, "polynomial literal");
    c_fact->add_option("--guard", guard, "degree guard override");

    auto* c_wit = app.add_subcommand("witness", "explicit k-factor factorization of x^n");
    add_common_options(c_wit, rf, format);
    c_wit->add_option("--n", n, "exponent of x^n")->required();
    c_wit->add_option("--len", len, "requested number of factors")->required();

    auto* c_count = app.add_subcommand("count-ge2", "count irreducible degree-2 GE polynomials");
    add_common_options(c_count, rf, format);

    auto* c_verify = app.add_subcommand("verify", "formula vs brute force for n = 1..n-max");
    add_common_options(c_verify, rf, format);
    c_verify->add_option("--n-max", n_max, "largest exponent to check")->required();
    c_verify->add_option("--guard", guard, "degree guard override");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        const int code = app.exit(e, out, err);
        return {code, out.str(), err.str()};
    } catch (const CLI::CallForAllHelp& e) {
        const int code = app.exit(e, out, err);
        return {code, out.str(), err.str()};
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.get_name() << ": " << e.what() << "\n";
        return {1, out.str(), err.str()};
    }

    try {
        const RingHandle ring = build_ring(rf);
        Outcome o;
        if (app.got_subcommand(c_lengths)) {
            o = do_lengths(ring, n, verify_flag, guard);
        } else if (app.got_subcommand(c_brute) || app.got_subcommand(c_fact)) {
            if (poly_literal.empty() && n <= 0) {
                err << "error: usage: one of --poly or --n is required\n";
                return {1, out.str(), err.str()};
            }
            const Poly f =
                poly_literal.empty() ? Poly::x_pow(ring, n) : parse_poly(ring, poly_literal);
            o = app.got_subcommand(c_brute) ? do_brute(ring, f, guard)
                                            : do_factorizations(ring, f, guard);
        } else if (app.got_subcommand(c_wit)) {
            o = do_witness(ring, n, len);
        } else if (app.got_subcommand(c_count)) {
            o = do_count_ge2(ring);
        } else {
            o = do_verify(ring, n_max, guard);
        }

        if (format == "json") {
            json top;
            top["ring"] = ring_json(*ring);
            top["query"] = o.query;
            top["result"] = o.result;
            top["source"] = o.source;
            top["verified"] = o.verified;
            out << top.dump() << "\n";
        } else {
            out << o.table;
        }
        return {o.exit_code, out.str(), err.str()};
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return {1, out.str(), err.str()};
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return {2, out.str(), err.str()};
    }
}

}  // namespace lenfact
