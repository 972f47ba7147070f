#include "cli.hpp"

#include "verlab/json_io.hpp"
#include "verlab/verlab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace verlab::cli {

namespace {

using json = nlohmann::json;

struct Args {
    std::optional<std::int64_t> p, n, prec;
    std::int64_t m = 0, a = 0, b = 0, c = 0, i = 0, k = 0;
    std::optional<std::int64_t> a_opt, top, nlen, hom_dim;
    std::int64_t nmax = 0;
    std::string character, other, basis = "weyl", digits, series, hs, provider, csv, facts, x;
    std::optional<std::string> value;
    std::int64_t dimplus_v = 0, dimplus_vdual = 0;
};

/// Fills `provenance` and returns the result document.
using Handler = std::function<json(const Args&, std::string& provenance)>;

Prime need_prime(const Args& args)
{
    if (!args.p)
        throw Error(ErrorCode::InvalidArgument, "this command needs -p");
    return Prime(*args.p);
}

std::int64_t truncation(const Args& args)
{
    return args.prec ? *args.prec : truncation_from_env();
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, what + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

/// "w:c,w:c,..." into a folded character.
Character parse_character(const std::string& text)
{
    Character out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::ParseError, "character term '" + item + "' is not weight:coeff");
        const auto parts = parse_int_list(item.substr(0, colon) + "," + item.substr(colon + 1), "character term");
        out.add_term(parts[0], parts[1]);
    }
    return out;
}

json character_result(const Character& ch, const Args& args)
{
    json out = io::to_json(ch);
    if (args.p) {
        const Prime p(*args.p);
        out["dim_mod_p"] = dimension_mod(ch, p);
        out["quantum_dim"] = quantum_dimension(ch, p);
    }
    return out;
}

json big_json(const BigInt& v)
{
    return v.str();
}

LengthProvider make_provider(const Args& args)
{
    std::optional<LengthProvider> provider;
    if (args.provider == "binomial")
        provider = LengthProvider::binomial(args.m);
    else if (args.provider == "partitions")
        provider = LengthProvider::partitions();
    else if (args.provider == "sl2_sym")
        provider = LengthProvider::sl2_sym(need_prime(args));
    else if (args.provider == "constant")
        provider = LengthProvider::constant();
    else if (args.provider == "csv") {
        if (args.csv.empty())
            throw Error(ErrorCode::InvalidArgument, "provider csv needs --csv PATH");
        std::ifstream in(args.csv);
        if (!in)
            throw Error(ErrorCode::ParseError, "cannot open " + args.csv);
        provider = LengthProvider::from_csv(in, "csv:" + args.csv);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown provider '" + args.provider + "'");
    }
    if (args.hom_dim)
        provider = provider->with_hom_dim(*args.hom_dim);
    return *provider;
}

json growth_json(const GrowthEstimate& e)
{
    json samples = json::array();
    for (const auto& s : e.samples)
        samples.push_back({{"n", s.n}, {"cumulative", big_json(s.cumulative)}, {"estimate", s.estimate}});
    return {{"samples", samples},
            {"final", e.final_value},
            {"classification", std::string(growth_class_name(e.classification))},
            {"diagnostics", e.diagnostics}};
}

// ---- handlers -------------------------------------------------------------

json char_weyl(const Args& args, std::string& prov)
{
    prov = "Weyl character q^m + q^(m-2) + ... + q^-m";
    return character_result(weyl_char(args.m), args);
}

json char_simple(const Args& args, std::string& prov)
{
    prov = "Steinberg product over base-p digits of Frobenius-twisted Weyl characters";
    return character_result(simple_char(need_prime(args), args.m), args);
}

json char_tilt(const Args& args, std::string& prov)
{
    prov = "tilting recursion T(m0 + p m1) = T(m0) (x) T(m1)^[1], m0 in [p-1, 2p-2]";
    return character_result(tilting_char(need_prime(args), args.m), args);
}

json char_decompose(const Args& args, std::string& prov)
{
    Basis basis;
    if (args.basis == "weyl")
        basis = Basis::weyl();
    else if (args.basis == "simple")
        basis = Basis::simple(need_prime(args));
    else if (args.basis == "tilting")
        basis = Basis::tilting(need_prime(args));
    else
        throw Error(ErrorCode::InvalidArgument, "unknown basis '" + args.basis + "'");
    const Decomposition d = decompose(parse_character(args.character), basis);
    json terms = json::array();
    for (const auto& [m, mult] : d.terms)
        terms.push_back({{"m", m}, {"mult", mult}});
    prov = "greedy top-weight peeling in the " + args.basis + " basis";
    return {{"basis", args.basis}, {"terms", terms}, {"length", d.total_length()}};
}

json char_mul(const Args& args, std::string& prov)
{
    prov = "product of folded Laurent polynomials";
    return character_result(parse_character(args.character) * parse_character(args.other), args);
}

json tilt_fuse_decompose(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    const std::int64_t level = args.n.value_or(1);
    json out = json::array();
    for (const auto& [m, mult] : tensor_decompose_tilt(p, args.a, args.b))
        out.push_back({{"T", m}, {"mult", mult}, {"negligible", is_negligible(p, level, m)}});
    prov = "tilting characters split by top-weight peeling; negligible iff m >= p^n - 1 (n = " + std::to_string(level) + ")";
    return out;
}

json verp_fuse(const Args& args, std::string& prov)
{
    prov = "T_a (x) T_b split into tiltings, negligible summands T_m (m >= p-1) dropped";
    return io::to_json(fuse(need_prime(args), args.a, args.b));
}

json verp_oracle(const Args& args, std::string& prov)
{
    prov = "Verlinde formula with S_xy = sqrt(2/p) sin((x+1)(y+1) pi/p)";
    return verlinde_oracle(need_prime(args), args.a, args.b, args.c);
}

json verp_fpdim(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    prov = "power iteration on the fusion matrix of L_a";
    return {{"fpdim", fpdim(p, args.a)}, {"quantum_dim", quantum_dimension(weyl_char(args.a), p)}, {"dim_fp", dim_fp(p, args.a)}};
}

json verp_gd(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    FusionElement x(p);
    if (!args.x.empty()) {
        std::stringstream ss(args.x);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw Error(ErrorCode::ParseError, "fusion term '" + item + "' is not index:mult");
            const auto parts = parse_int_list(item.substr(0, colon) + "," + item.substr(colon + 1), "fusion term");
            x.add(parts[0], parts[1]);
        }
    } else {
        x.add(args.a_opt.value_or(0), 1);
    }
    const std::int64_t n_max = args.nmax > 0 ? args.nmax : 40;
    const GdEstimate e = gd_estimate(p, x, n_max);
    json lengths = json::array();
    for (const auto& l : e.lengths)
        lengths.push_back(big_json(l));
    prov = "l(x^(x)n)^(1/n) by iterated fusion with exact lengths";
    return {{"lengths", lengths}, {"roots", e.roots}, {"final", e.final_value}};
}

json verpn_digits(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    const std::int64_t n = args.n.value_or(1);
    prov = "base-p digits, most significant first";
    return {{"digits", steinberg_digits(p, n, args.i)}, {"max_index", max_index(p, n)}};
}

json verpn_product(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    const std::int64_t n = args.n.value_or(1);
    prov = "Steinberg tensor product L_{p^(n-1) i_1} (x) ... (x) L_{i_n}";
    return {{"L", steinberg_product(p, n, parse_int_list(args.digits, "digits")).index()}};
}

json verpn_embed(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    const std::int64_t n = args.n.value_or(1);
    prov = "L_i of Ver_{p^n} is L_{pi} in Ver_{p^(n+1)}";
    return {{"L", embed(p, n, args.i)}, {"n", n + 1}};
}

json verpn_oddline(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    const std::int64_t n = args.n.value_or(1);
    const std::int64_t idx = odd_line(p, n);
    prov = "odd line L_{p^(n-1)(p-2)}";
    return {{"L", idx}, {"digits", steinberg_digits(p, n, idx)}};
}

json verpn_sympower(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    const std::int64_t n = args.n.value_or(1);
    const SymPowerKB kb = args.facts.empty() ? SymPowerKB() : SymPowerKB(io::load_sym_facts(args.facts));
    const SymStatus s = kb.status(p, n, args.i, args.k);
    prov = s.rule + ": " + s.provenance;
    return io::to_json(s);
}

json padic_pow(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    const std::int64_t n = truncation(args);
    std::optional<PadicDigits> d;
    if (args.value)
        d = padic_of_int(BigInt(*args.value), p, precision_for(p, n));
    else if (!args.digits.empty())
        d = PadicDigits(p, parse_int_list(args.digits, "digits"));
    else
        throw Error(ErrorCode::InvalidArgument, "padic pow needs --value or --digits");
    prov = "(1-t)^d = prod_j (1 - t^(p^j))^(d_j) truncated at t^N";
    json out = io::to_json(one_minus_t_pow(*d, n));
    out["exponent"] = io::to_json(*d);
    return out;
}

json padic_recover(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    std::vector<std::int64_t> coeffs;
    try {
        coeffs = json::parse(args.series).get<std::vector<std::int64_t>>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("--series must be a JSON array of integers: ") + e.what());
    }
    const FpSeries s(p, coeffs);
    const PadicDigits e = dimplus_exponent(s);
    prov = "greedy digit recovery of e with HS = (1-t)^e; Dim+ = -e";
    return {{"exponent", io::to_json(e)}, {"dimplus", io::to_json(-e)}};
}

json padic_finite(const Args& args, std::string& prov)
{
    if (!args.top)
        throw Error(ErrorCode::InvalidArgument, "padic finite needs --top");
    json out = {{"dimplus", dimplus_of_finite_sym(*args.top)}};
    if (args.p) {
        const Prime p(*args.p);
        const FpSeries hs = finite_sym_hilbert(p, *args.top, std::max(truncation(args), *args.top));
        out["hilbert"] = io::to_json(hs);
        out["dim_sym_mod_p"] = hs.value_at_one();
    }
    prov = "finite symmetric algebra: Dim+ = -(top non-zero degree), HS = (1-t)^top";
    return out;
}

json padic_extend(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    if (!args.nlen)
        throw Error(ErrorCode::InvalidArgument, "padic extend needs --nlen");
    const auto [e, e_dual] = extension_transform(p, *args.nlen, args.dimplus_v, args.dimplus_vdual);
    const std::int64_t n = truncation(args);
    const PadicDigits via_series =
        extension_dimplus_via_series(*args.nlen, padic_of_int(args.dimplus_v, p, precision_for(p, n)), n);
    const bool agrees = via_series == padic_of_int(e, p, via_series.precision());
    prov = "Dim+ E = Dim+ V + 1 - n, Dim+ E^dual = Dim+ V^dual + 1; cross-checked by HS_E = (1 + ... + t^(n-1)) HS_V";
    return {{"dimplus_E", e.convert_to<std::int64_t>()},
            {"dimplus_E_dual", e_dual.convert_to<std::int64_t>()},
            {"series_check", {{"dimplus_E", io::to_json(via_series)}, {"agrees", agrees}}}};
}

json padic_palindrome(const Args& args, std::string& prov)
{
    const Prime p = need_prime(args);
    const auto hs = parse_int_list(args.hs, "hs");
    const std::int64_t top = args.top.value_or(static_cast<std::int64_t>(hs.size()) - 1);
    prov = "hs[i] = hs[d-i] * hs[d] mod p";
    return {{"palindromic", frobenius_palindromy_check(p, hs, top)}};
}

json sgd_estimate_cmd(const Args& args, std::string& prov)
{
    const LengthProvider provider = make_provider(args);
    const std::int64_t n_max = args.nmax > 0 ? args.nmax : 16384;
    prov = "tail fit of log l(Sym^{<=n}) / log n against 1/log n at n = 2^k, provider " + provider.name();
    return growth_json(sgd_estimate(provider, n_max));
}

json sgd_diagnose(const Args& args, std::string& prov)
{
    const LengthProvider provider = make_provider(args);
    const std::int64_t n_max = args.nmax > 0 ? args.nmax : 16384;
    const MnReport r = mn_diagnostic(provider, n_max);
    prov = "dim Hom(X,1) <= sgd(X); equality within 0.05 reported as Holds, provider " + provider.name();
    json sgd = std::isfinite(r.sgd) ? json(r.sgd) : json("inf");
    return {{"sgd", sgd},
            {"hom_dim", r.hom_dim},
            {"inequality_ok", r.inequality_ok},
            {"verdict", std::string(verdict_name(r.verdict))},
            {"estimate", growth_json(r.estimate)}};
}

/// Typed rendering of an option's raw strings for the `inputs` record.
json option_value(const CLI::Option* opt)
{
    if (opt->get_type_size() == 0)
        return true;
    const auto& raw = opt->results();
    std::string joined;
    for (std::size_t i = 0; i < raw.size(); ++i)
        joined += (i ? "," : "") + raw[i];
    try {
        std::size_t used = 0;
        const long long v = std::stoll(joined, &used);
        if (used == joined.size())
            return v;
    } catch (const std::exception&) {
    }
    return joined;
}

json error_payload(const std::string& command, const json& inputs, std::string_view name, const std::string& message)
{
    return {{"command", command}, {"inputs", inputs}, {"error", {{"name", std::string(name)}, {"message", message}}}};
}

} // namespace

CommandResult run(const std::vector<std::string>& argv)
{
    CLI::App app{"Exact invariants of Verlinde categories: SL2 characters, tilting modules, Ver_p fusion, "
                 "Ver_{p^n} simples, p-adic dimensions and growth dimensions.",
                 "verlab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Args args;
    std::string command;
    Handler handler;
    CLI::App* leaf = nullptr;
    bool text = false;

    auto add_leaf = [&](CLI::App* group, const std::string& name, const std::string& description, Handler h) {
        CLI::App* sub = group->add_subcommand(name, description);
        sub->add_option("-p", args.p, "prime p");
        sub->add_option("-n", args.n, "level n of Ver_{p^n}");
        sub->add_option("--prec", args.prec, "series truncation N (default $VERLAB_PREC or 64)");
        CLI::Option* json_flag = sub->add_flag("--json", "JSON output (default)");
        CLI::Option* text_flag = sub->add_flag("--text", text, "human-readable output");
        json_flag->excludes(text_flag);
        sub->callback([&, sub, group, name, h] {
            command = group->get_name() + " " + name;
            handler = h;
            leaf = sub;
        });
        return sub;
    };

    CLI::App* chr = app.add_subcommand("char", "SL2 characters")->require_subcommand(1);
    add_leaf(chr, "weyl", "Weyl character chi_m", char_weyl)->add_option("-m", args.m, "highest weight")->required();
    add_leaf(chr, "simple", "simple character L(m) in characteristic p", char_simple)->add_option("-m", args.m, "highest weight")->required();
    add_leaf(chr, "tilt", "tilting character T(m) in characteristic p", char_tilt)->add_option("-m", args.m, "highest weight")->required();
    {
        auto* s = add_leaf(chr, "decompose", "split a character into a basis", char_decompose);
        s->add_option("--char", args.character, "character as weight:coeff,... (folded)")->required();
        s->add_option("--basis", args.basis, "weyl | simple | tilting")->check(CLI::IsMember({"weyl", "simple", "tilting"}));
    }
    {
        auto* s = add_leaf(chr, "mul", "product of two characters", char_mul);
        s->add_option("--char", args.character, "first factor, weight:coeff,...")->required();
        s->add_option("--other", args.other, "second factor, weight:coeff,...")->required();
    }

    CLI::App* tilt = app.add_subcommand("tilt", "tilting modules")->require_subcommand(1);
    {
        auto* s = add_leaf(tilt, "fuse-decompose", "T_a (x) T_b into indecomposable tiltings", tilt_fuse_decompose);
        s->add_option("-a", args.a, "first highest weight")->required();
        s->add_option("-b", args.b, "second highest weight")->required();
    }

    CLI::App* verp = app.add_subcommand("verp", "fusion ring of Ver_p")->require_subcommand(1);
    {
        auto* s = add_leaf(verp, "fuse", "L_a (x) L_b", verp_fuse);
        s->add_option("-a", args.a)->required();
        s->add_option("-b", args.b)->required();
        s = add_leaf(verp, "oracle", "Verlinde coefficient N_ab^c", verp_oracle);
        s->add_option("-a", args.a)->required();
        s->add_option("-b", args.b)->required();
        s->add_option("-c", args.c)->required();
        s = add_leaf(verp, "fpdim", "Frobenius-Perron and F_p dimensions of L_a", verp_fpdim);
        s->add_option("-a", args.a)->required();
        s = add_leaf(verp, "gd", "growth dimension sequence of L_a or of --x", verp_gd);
        s->add_option("-a", args.a_opt, "simple index");
        s->add_option("--x", args.x, "fusion element as index:mult,...");
        s->add_option("--nmax", args.nmax, "largest tensor power (default 40)");
    }

    CLI::App* verpn = app.add_subcommand("verpn", "simple objects of Ver_{p^n}")->require_subcommand(1);
    {
        auto* s = add_leaf(verpn, "digits", "Steinberg digits of L_i", verpn_digits);
        s->add_option("-i", args.i, "simple index")->required();
        s = add_leaf(verpn, "product", "simple with the given Steinberg digits", verpn_product);
        s->add_option("--digits", args.digits, "i_1,...,i_n most significant first")->required();
        s = add_leaf(verpn, "embed", "index of L_i inside Ver_{p^(n+1)}", verpn_embed);
        s->add_option("-i", args.i, "simple index")->required();
        add_leaf(verpn, "oddline", "index of the odd line", verpn_oddline);
        s = add_leaf(verpn, "sympower", "status of Sym^k L_i", verpn_sympower);
        s->add_option("-i", args.i, "simple index")->required();
        s->add_option("-k", args.k, "symmetric power")->required();
        s->add_option("--facts", args.facts, "fact table JSON (default: built-in)");
    }

    CLI::App* padic = app.add_subcommand("padic", "Hilbert series over F_p and p-adic dimensions")->require_subcommand(1);
    {
        auto* s = add_leaf(padic, "pow", "(1-t)^d as a truncated series", padic_pow);
        s->add_option("--value", args.value, "integer exponent d");
        s->add_option("--digits", args.digits, "p-adic digits d_0,d_1,... least significant first");
        s = add_leaf(padic, "recover", "exponent e and Dim+ = -e from a Hilbert series", padic_recover);
        s->add_option("--series", args.series, "JSON array of residues c_0..c_N")->required();
        s = add_leaf(padic, "finite", "Dim+ of a finite symmetric algebra", padic_finite);
        s->add_option("--top", args.top, "top non-zero symmetric degree");
        s = add_leaf(padic, "extend", "Dim+ of an extension of V by the unit", padic_extend);
        s->add_option("--nlen", args.nlen, "length of the image of Sym 1 (a power of p)");
        s->add_option("--dimplus-v", args.dimplus_v, "Dim+ V")->required();
        s->add_option("--dimplus-vdual", args.dimplus_vdual, "Dim+ V^dual")->required();
        s = add_leaf(padic, "palindrome", "Frobenius palindromy of a finite Hilbert polynomial", padic_palindrome);
        s->add_option("--hs", args.hs, "dimensions of Sym^0..Sym^d, comma separated")->required();
        s->add_option("--top", args.top, "top degree d (default: last entry)");
    }

    CLI::App* sgd = app.add_subcommand("sgd", "symmetric growth dimension")->require_subcommand(1);
    for (const auto& [name, description, h] : {std::tuple{"estimate", "estimate sgd for a length provider", Handler(sgd_estimate_cmd)},
                                               std::tuple{"diagnose", "compare sgd with dim Hom(X, 1)", Handler(sgd_diagnose)}}) {
        auto* s = add_leaf(sgd, name, description, h);
        s->add_option("--provider", args.provider, "binomial | partitions | sl2_sym | constant | csv")->required();
        s->add_option("-m", args.m, "number of variables for binomial");
        s->add_option("--csv", args.csv, "CSV with header n,length");
        s->add_option("--nmax", args.nmax, "largest degree (default 16384)");
        s->add_option("--hom-dim", args.hom_dim, "dim Hom(X, 1)");
    }

    CommandResult result;
    std::vector<std::string> reversed(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream out, err;
        result.exit_code = app.exit(e, out, err);
        result.out = out.str();
        return result;
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream out, err;
        result.exit_code = app.exit(e, out, err);
        result.out = out.str();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.payload = error_payload(command, json::object(), "UsageError", e.what());
        result.out = result.payload.dump() + "\n";
        result.err = std::string(e.what()) + "\nRun with --help for usage.\n";
        return result;
    }

    json inputs = json::object();
    for (const CLI::Option* opt : leaf->get_options()) {
        if (opt->count() == 0)
            continue;
        std::string key = opt->get_name();
        if (key == "--json" || key == "--text" || key == "--help")
            continue;
        key.erase(0, key.find_first_not_of('-'));
        inputs[key] = option_value(opt);
    }

    try {
        std::string provenance;
        json res = handler(args, provenance);
        result.payload = {{"command", command}, {"inputs", inputs}, {"result", res}, {"provenance", provenance}};
        result.exit_code = 0;
    } catch (const Error& e) {
        result.payload = error_payload(command, inputs, e.name(), e.what());
        result.exit_code = 1;
        result.err = std::string(e.what()) + "\n";
    }
    result.out = (text ? render_text(result.payload) : result.payload.dump()) + "\n";
    return result;
}

namespace {

std::string scalar_text(const json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_value(std::ostringstream& os, const json& v, const std::string& indent)
{
    if (v.is_array() && !v.empty() && v.front().is_object()) {
        std::vector<std::string> cols;
        for (const auto& [k, _] : v.front().items())
            cols.push_back(k);
        std::vector<std::size_t> width;
        for (const auto& c : cols) {
            std::size_t w = c.size();
            for (const auto& row : v)
                w = std::max(w, scalar_text(row.value(c, json())).size());
            width.push_back(w);
        }
        os << indent;
        for (std::size_t i = 0; i < cols.size(); ++i)
            os << std::left << std::setw(static_cast<int>(width[i] + 2)) << cols[i];
        os << "\n";
        for (const auto& row : v) {
            os << indent;
            for (std::size_t i = 0; i < cols.size(); ++i)
                os << std::left << std::setw(static_cast<int>(width[i] + 2)) << scalar_text(row.value(cols[i], json()));
            os << "\n";
        }
    } else if (v.is_object()) {
        for (const auto& [k, item] : v.items()) {
            if (item.is_object() || (item.is_array() && !item.empty() && item.front().is_object())) {
                os << indent << k << ":\n";
                render_value(os, item, indent + "  ");
            } else {
                os << indent << k << ": " << scalar_text(item) << "\n";
            }
        }
    } else {
        os << indent << scalar_text(v) << "\n";
    }
}

} // namespace

std::string render_text(const json& payload)
{
    std::ostringstream os;
    os << "command: " << payload.value("command", std::string()) << "\n";
    if (payload.contains("inputs") && !payload["inputs"].empty()) {
        os << "inputs:";
        for (const auto& [k, v] : payload["inputs"].items())
            os << " " << k << "=" << scalar_text(v);
        os << "\n";
    }
    if (payload.contains("error")) {
        os << "error: " << payload["error"]["name"].get<std::string>() << "\n";
        os << "  " << payload["error"]["message"].get<std::string>() << "\n";
        return os.str();
    }
    os << "result:\n";
    render_value(os, payload["result"], "  ");
    os << "provenance: " << payload.value("provenance", std::string()) << "\n";
    std::string s = os.str();
    if (!s.empty() && s.back() == '\n')
        s.pop_back();
    return s;
}

} // namespace verlab::cli
