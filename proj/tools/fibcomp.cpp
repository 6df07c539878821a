// fibcomp: command-line front end for the composition library.
//
// Exit status: 0 success/pass, 1 domain or verification failure, 2 usage or
// parse error. Results go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibcomp/fibcomp.hpp"

namespace {

using namespace fibcomp;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

/// Usage error detected after argument parsing.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* bound_env = "FIBCOMP_MATERIALIZE_BOUND";
constexpr const char* nmax_env = "FIBCOMP_DEFAULT_NMAX";

std::uint32_t env_knob(const char* name, std::uint32_t fallback)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return fallback;
    std::uint32_t value = 0;
    std::string_view text(raw);
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw usage_error(std::string(name) + " must be a nonnegative integer, got '" + raw + "'");
    return value;
}

BigInt parse_bigint(std::string_view text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
        throw parse_error("expected a nonnegative integer, got '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

std::string strip_cr(std::string line)
{
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

/// Runs fn on each input: the single argument if given, otherwise each stdin
/// line. Reports per-line errors to stderr and returns the worst exit code.
template <class Fn>
int for_each_input(const std::optional<std::string>& single, Fn&& fn)
{
    auto run = [&](const std::string& input) -> int {
        try {
            std::cout << fn(input) << '\n';
            return exit_ok;
        } catch (const parse_error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return exit_usage;
        } catch (const precondition_error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return exit_failure;
        }
    };
    if (single)
        return run(*single);
    int worst = exit_ok;
    for (std::string line; std::getline(std::cin, line);)
        worst = std::max(worst, run(strip_cr(line)));
    return worst;
}

struct EnumerateArgs {
    std::string cls;
    std::uint32_t n = 0;
    std::optional<std::uint64_t> limit;
    std::optional<std::string> rank_range;
};

int cmd_enumerate(const EnumerateArgs& a)
{
    ClassTag tag = parse_class(a.cls);
    std::optional<CompositionStream> stream;
    if (a.rank_range) {
        auto dots = a.rank_range->find("..");
        if (dots == std::string::npos)
            throw parse_error("--rank-range expects a..b, got '" + *a.rank_range + "'");
        BigInt lo = parse_bigint(std::string_view(*a.rank_range).substr(0, dots));
        BigInt hi = parse_bigint(std::string_view(*a.rank_range).substr(dots + 2));
        if (lo > hi)
            throw usage_error("--rank-range " + *a.rank_range + " is reversed");
        CountTable table(tag, a.n);
        if (lo > table.count(a.n))
            lo = table.count(a.n);
        stream.emplace(enumerate_ranks(table, a.n, lo, hi));
    } else {
        stream.emplace(enumerate(tag, a.n));
    }
    std::uint64_t emitted = 0;
    for (const Composition& c : *stream) {
        if (a.limit && emitted == *a.limit)
            break;
        std::cout << to_text(c) << '\n';
        ++emitted;
    }
    return exit_ok;
}

struct CodecArgs {
    std::string op;
    std::optional<std::string> input;
    std::optional<std::uint32_t> board;
};

int cmd_codec(const CodecArgs& a)
{
    if (a.op == "encode")
        return for_each_input(a.input, [](const std::string& s) { return encode(parse_composition(s)).str(); });
    if (a.op == "decode")
        return for_each_input(a.input, [&](const std::string& s) {
            return to_text(decode(CutJoinSeq::parse(s, a.board)));
        });
    if (a.op == "conjugate")
        return for_each_input(a.input, [](const std::string& s) { return to_text(conjugate(parse_composition(s))); });
    if (a.op == "reverse")
        return for_each_input(a.input, [](const std::string& s) { return to_text(reverse(parse_composition(s))); });
    throw parse_error("unknown codec op '" + a.op + "' (expected encode, decode, conjugate, reverse)");
}

struct MapArgs {
    std::string name;
    std::string direction;
    std::vector<std::string> rest;
    std::optional<std::uint32_t> n;
};

std::uint32_t implied_n(MapId m, Origin origin, const Composition& payload)
{
    if (m == MapId::Thm4)
        return payload.total();
    return payload.total() + (origin == Origin::FromNMinus2 ? 2 : 1);
}

int cmd_map(const MapArgs& a)
{
    MapId m = parse_map(a.name);
    if (a.direction == "fwd") {
        if (a.rest.empty() || a.rest.size() > 2)
            throw usage_error("map " + a.name + " fwd expects: <origin-tag> [composition]");
        Origin origin = parse_origin(a.rest[0]);
        std::optional<std::string> single;
        if (a.rest.size() == 2)
            single = a.rest[1];
        return for_each_input(single, [&](const std::string& s) {
            Composition payload = parse_composition(s);
            return to_text(forward(m, {origin, payload}, a.n.value_or(implied_n(m, origin, payload))));
        });
    }
    if (a.direction == "bwd") {
        if (a.rest.size() > 1)
            throw usage_error("map " + a.name + " bwd expects: [composition]");
        std::optional<std::string> single;
        if (a.rest.size() == 1)
            single = a.rest[0];
        return for_each_input(single, [&](const std::string& s) {
            Composition c = parse_composition(s);
            TaggedSource src = backward(m, c, a.n.value_or(c.total()));
            return std::string(origin_name(src.origin)) + " " + to_text(src.payload);
        });
    }
    throw parse_error("map direction must be fwd or bwd, got '" + a.direction + "'");
}

int cmd_verify(const std::string& target, std::optional<std::uint32_t> n_max_arg)
{
    VerifyOptions opts{env_knob(bound_env, 20)};
    std::uint32_t n_max = n_max_arg.value_or(std::min(env_knob(nmax_env, 30), opts.materialize_bound));
    std::vector<MapId> maps;
    if (target == "all")
        maps.assign(std::begin(all_maps), std::end(all_maps));
    else
        maps.push_back(parse_map(target));
    for (MapId m : maps)
        if (n_max < min_n(m))
            throw usage_error(std::string(map_name(m)) + " is defined for n >= " + std::to_string(min_n(m)) +
                              "; n_max = " + std::to_string(n_max) + " leaves nothing to verify");
    if (n_max > opts.materialize_bound)
        throw usage_error("n_max = " + std::to_string(n_max) + " exceeds the materialization bound " +
                          std::to_string(opts.materialize_bound) + " (raise " + bound_env + ")");

    int status = exit_ok;
    for (MapId m : maps)
        for (std::uint32_t n = min_n(m); n <= n_max; ++n) {
            auto report = verify_bijection(m, n, opts);
            std::cout << report.map << ' ' << n;
            if (report.passed) {
                std::cout << " pass " << report.target_size << " =";
                for (std::size_t b = 0; b < report.block_sizes.size(); ++b)
                    std::cout << (b == 0 ? " " : " + ") << report.block_sizes[b];
                std::cout << '\n';
            } else {
                std::cout << " FAIL " << report.failure << '\n';
                if (status == exit_ok)
                    std::cerr << "counterexample: " << report.failure << '\n';
                status = exit_failure;
            }
        }
    return status;
}

std::string join_terms(const std::vector<BigInt>& terms)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0)
            out += '+';
        out += terms[i].str();
    }
    return out.empty() ? "0" : out;
}

const char* identity_statement(IdentityId id)
{
    switch (id) {
    case IdentityId::Eq1: return "F_1 + F_3 + ... + F_{2n-1} = F_{2n}";
    case IdentityId::Eq2: return "F_2 + F_4 + ... + F_{2n} = F_{2n+1} - 1";
    case IdentityId::Eq3: return "2 (F_1 + F_4 + ... + F_{3n-2}) = F_{3n}";
    case IdentityId::Eq4: return "sum_k binomial(n-1-k, k) = F_n";
    case IdentityId::Pow2: return "c(n) = 2^{n-1}";
    }
    return "";
}

const char* identity_cross_check(IdentityId id)
{
    switch (id) {
    case IdentityId::Eq1: return "rhs = count(odd, 2n) by enumeration";
    case IdentityId::Eq2: return "rhs = count(odd, 2n+1) - 1 by enumeration";
    case IdentityId::Eq3: return "rhs = count(min2, 3n+1) by enumeration";
    case IdentityId::Eq4: return "binomial terms = min2 compositions of n+1 by part count";
    case IdentityId::Pow2: return "lhs = count(all, n) by enumeration";
    }
    return "";
}

int cmd_identity(const std::string& target, std::optional<std::uint32_t> n_max_arg)
{
    std::uint32_t n_max = n_max_arg.value_or(env_knob(nmax_env, 30));
    std::vector<IdentityId> ids;
    if (target == "all")
        ids.assign(std::begin(all_identities), std::end(all_identities));
    else
        ids.push_back(parse_identity(target));
    for (IdentityId id : ids)
        if (n_max < (id == IdentityId::Eq2 ? 0u : 1u))
            throw usage_error(std::string(identity_name(id)) + " needs n_max >= 1");

    bool all_passed = true;
    for (IdentityId id : ids) {
        auto report = check_identity(id, n_max);
        std::cout << "# " << identity_name(id) << ": " << identity_statement(id) << '\n';
        std::optional<std::uint32_t> checked_to;
        for (const auto& row : report.rows)
            if (row.class_count)
                checked_to = row.n;
        if (checked_to)
            std::cout << "# cross-check (" << identity_cross_check(id) << ") for n <= " << *checked_to << '\n';
        std::cout << "# n lhs rhs status" << (id == IdentityId::Eq4 ? " binomial-terms part-count-terms" : "")
                  << '\n';
        for (const auto& row : report.rows) {
            std::cout << row.n << ' ' << row.lhs << ' ' << row.rhs << ' ' << (row.ok ? "ok" : "FAIL");
            if (id == IdentityId::Eq4)
                std::cout << ' ' << join_terms(row.binomial_terms) << ' '
                          << (row.part_terms ? join_terms(*row.part_terms) : std::string("-"));
            std::cout << '\n';
        }
        std::cout << "# " << identity_name(id) << ' ' << (report.passed ? "pass" : "FAIL") << '\n';
        all_passed = all_passed && report.passed;
    }
    return all_passed ? exit_ok : exit_failure;
}

struct RenderArgs {
    std::string composition;
    bool svg = false;
    bool ascii = false;
    std::string shade = "none";
    std::string annotate = "none";
};

int cmd_render(const RenderArgs& a)
{
    RenderSpec spec;
    spec.format = a.svg ? RenderFormat::Svg : RenderFormat::Ascii;
    if (a.shade == "even-gray")
        spec.shading = Shading::EvenGray;
    else if (a.shade != "none")
        throw parse_error("--shade expects none or even-gray");
    if (a.annotate == "cutjoin")
        spec.annotation = Annotation::CutJoin;
    else if (a.annotate == "lengths")
        spec.annotation = Annotation::Lengths;
    else if (a.annotate != "none")
        throw parse_error("--annotate expects none, cutjoin, or lengths");
    std::cout << render(parse_composition(a.composition), spec);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fibonacci-counted integer compositions: enumeration, cut/join codec, bijections, identities"};
    app.require_subcommand(1);
    app.footer(std::string("Environment:\n  ") + bound_env +
               "  largest n materialized by verify (default 20)\n  " + nmax_env +
               "  default n_max for verify and identity (default 30)\n\n"
               "Compositions are written 3,1,1; the empty composition is '-'. Cut/join words are written JJCC.\n"
               "codec and map read one input per stdin line when the input argument is omitted.\n"
               "Exit status: 0 success, 1 domain or verification failure, 2 usage error.");

    EnumerateArgs enum_args;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List class compositions of n in ascending lexicographic order");
    enumerate_cmd->add_option("class", enum_args.cls, "all, parts12, odd, min2")->required();
    enumerate_cmd->add_option("n", enum_args.n, "Total")->required();
    enumerate_cmd->add_option("--limit", enum_args.limit, "Print at most L compositions");
    enumerate_cmd->add_option("--rank-range", enum_args.rank_range, "Half-open rank window a..b");

    std::string count_cls;
    std::uint32_t count_n = 0;
    auto* count_cmd = app.add_subcommand("count", "Number of class compositions of n");
    count_cmd->add_option("class", count_cls, "all, parts12, odd, min2")->required();
    count_cmd->add_option("n", count_n, "Total")->required();

    CodecArgs codec_args;
    auto* codec_cmd = app.add_subcommand("codec", "Cut/join encoding, decoding, conjugation, reversal");
    codec_cmd->add_option("op", codec_args.op, "encode, decode, conjugate, reverse")->required();
    codec_cmd->add_option("input", codec_args.input, "Composition or cut/join word (stdin lines if omitted)");
    codec_cmd->add_option("--board", codec_args.board, "Board length for decode; must equal word length + 1");

    MapArgs map_args;
    auto* map_cmd = app.add_subcommand("map", "Apply a bijection: map <prop1|prop2|prop3|thm4> fwd <origin> <c> | bwd <c>");
    map_cmd->add_option("name", map_args.name, "prop1, prop2, prop3, thm4")->required();
    map_cmd->add_option("direction", map_args.direction, "fwd or bwd")->required();
    map_cmd->add_option("args", map_args.rest, "fwd: origin tag and composition; bwd: composition");
    map_cmd->add_option("--n", map_args.n, "Target total (inferred from the input when omitted)");

    std::string verify_target;
    std::optional<std::uint32_t> verify_n;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify bijections for every valid n <= n_max");
    verify_cmd->add_option("target", verify_target, "prop1, prop2, prop3, thm4, all")->required();
    verify_cmd->add_option("n_max", verify_n, "Largest n");

    std::string identity_target;
    std::optional<std::uint32_t> identity_n;
    auto* identity_cmd = app.add_subcommand("identity", "Check a Fibonacci identity by exact counting");
    identity_cmd->add_option("id", identity_target, "eq1, eq2, eq3, eq4, pow2, all")->required();
    identity_cmd->add_option("n_max", identity_n, "Largest n");

    RenderArgs render_args;
    auto* render_cmd = app.add_subcommand("render", "Draw the tiling of a composition");
    render_cmd->add_option("composition", render_args.composition, "Composition, e.g. 3,1,1")->required();
    auto* ascii_flag = render_cmd->add_flag("--ascii", render_args.ascii, "ASCII board (default)");
    render_cmd->add_flag("--svg", render_args.svg, "SVG document")->excludes(ascii_flag);
    render_cmd->add_option("--shade", render_args.shade, "none or even-gray");
    render_cmd->add_option("--annotate", render_args.annotate, "none, cutjoin, lengths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*enumerate_cmd)
            return cmd_enumerate(enum_args);
        if (*count_cmd) {
            std::cout << count(parse_class(count_cls), count_n) << '\n';
            return exit_ok;
        }
        if (*codec_cmd)
            return cmd_codec(codec_args);
        if (*map_cmd)
            return cmd_map(map_args);
        if (*verify_cmd)
            return cmd_verify(verify_target, verify_n);
        if (*identity_cmd)
            return cmd_identity(identity_target, identity_n);
        if (*render_cmd)
            return cmd_render(render_args);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const invariant_violation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
