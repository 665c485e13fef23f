// Command line front end: JSON documents in, JSON documents out.
// Exit status: 0 success, 1 validation error, 2 property-check failure.

#include "toricstab/fans.hpp"
#include "toricstab/json_io.hpp"
#include "toricstab/polyprod.hpp"
#include "toricstab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace toric;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitPropertyFailure = 2;

struct CommonOpts {
    std::string input = "-";
    std::string output = "-";
    bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true)
{
    if (with_input)
        cmd->add_option("--input", opts.input, "Input document path, or - for stdin");
    cmd->add_option("--output", opts.output, "Output path, or - for stdout");
    cmd->add_flag("--pretty", opts.pretty, "Indent the output document");
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot open output file: " + path);
    out << text;
}

std::string dump_doc(const json& j, bool pretty)
{
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed)
{
    if (flag_seed)
        return *flag_seed;
    if (const char* env = std::getenv("TORICSTAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ValidationError("TORICSTAB_SEED is not an unsigned integer");
        }
    }
    return kDefaultSeed;
}

std::vector<long long> parse_int_list(const std::string& text)
{
    std::vector<long long> values;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ValidationError("malformed integer list entry: '" + token + "'");
        }
    }
    return values;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact combinatorial invariants of coordinate-subspace toric varieties"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "toricstab 0.1.0");

    CommonOpts opts;

    auto* kcomplex = app.add_subcommand(
        "kcomplex", "Face complex generated by a collection of index subsets");
    add_common(kcomplex, opts);

    auto* fan = app.add_subcommand("fan", "Fan built over the face complex");
    add_common(fan, opts);

    auto* primitive = app.add_subcommand("primitive", "Primitive generator sets of the fan");
    add_common(primitive, opts);

    auto* rsigma = app.add_subcommand("rsigma", "Minimum primitive-set size of the fan");
    add_common(rsigma, opts);

    auto* rmin = app.add_subcommand("rmin", "Minimum member size of the collection");
    add_common(rmin, opts);

    auto* stabdim = app.add_subcommand("stabdim", "Closed-form stability dimensions");
    add_common(stabdim, opts, false);
    int sd_rmin = 0, sd_d = 0;
    std::optional<int> sd_n;
    stabdim->add_option("--rmin", sd_rmin, "Minimum member size")->required();
    stabdim->add_option("--d", sd_d, "Map degree")->required();
    stabdim->add_option("--n", sd_n, "Also report the projective-case dimension for this n");

    auto* bandscan = app.add_subcommand(
        "bandscan", "Re-derive a stability dimension from the vanishing rules");
    add_common(bandscan, opts, false);
    std::optional<int> bs_rmin, bs_n, bs_klo, bs_khi, bs_smax;
    int bs_d = 0;
    std::string bs_mode = "general";
    bool bs_full_grid = false;
    bandscan->add_option("--rmin", bs_rmin, "Minimum member size (general mode)");
    bandscan->add_option("--n", bs_n, "Ambient dimension (projective mode)");
    bandscan->add_option("--d", bs_d, "Map degree")->required();
    bandscan->add_option("--mode", bs_mode, "general or projective")
        ->check(CLI::IsMember({"general", "projective"}));
    std::string bs_seed_rule = "truncation";
    bandscan->add_option("--seed-rule", bs_seed_rule,
                         "Unknown-column floor in general mode")
        ->check(CLI::IsMember({"truncation", "configuration"}));
    bandscan->add_option("--k-lo", bs_klo, "Window lower column bound");
    bandscan->add_option("--k-hi", bs_khi, "Window upper column bound");
    bandscan->add_option("--s-max", bs_smax, "Window row bound");
    bandscan->add_flag("--full-grid", bs_full_grid, "Emit every cell, not only unknowns");

    auto* holcheck = app.add_subcommand(
        "holcheck", "Membership of a polynomial tuple in the based map space");
    add_common(holcheck, opts);

    auto* stabilize_cmd = app.add_subcommand(
        "stabilize", "Raise the degree by appending one fresh point per component");
    add_common(stabilize_cmd, opts);

    auto* orbitlimit = app.add_subcommand(
        "orbitlimit", "Face indexing the torus-orbit limit of an integer vector");
    add_common(orbitlimit, opts, false);
    std::string ol_u;
    int ol_n = 0;
    orbitlimit->add_option("--u", ol_u, "Comma-separated integer vector of length n-1")
        ->required();
    orbitlimit->add_option("--n", ol_n, "Ambient dimension")->required();

    auto* lemma63 = app.add_subcommand(
        "lemma63", "Exhaustive agreement of the wedge and polyhedral-product predicates");
    add_common(lemma63, opts);
    std::string l63_pattern;
    lemma63->add_option("--pattern", l63_pattern,
                        "Check a single support pattern, given as a bitstring of length n");

    auto* verify_all = app.add_subcommand("verify-all", "Run every cross-check suite");
    add_common(verify_all, opts, false);
    VerifyLimits limits;
    std::optional<std::uint64_t> flag_seed;
    verify_all->add_option("--n-max", limits.n_max, "Ambient dimension cap");
    verify_all->add_option("--d-max", limits.d_max, "Degree cap");
    verify_all->add_option("--seed", flag_seed, "Seed for the randomized suites");
    verify_all->add_option("--random-collections", limits.random_collections,
                           "Random collections per collection suite");
    verify_all->add_option("--random-tuples", limits.random_tuples,
                           "Random tuples for the stabilization suite");
    verify_all->add_option("--random-point-sets", limits.random_point_sets,
                           "Random point sets for the rank suite");

    CLI11_PARSE(app, argc, argv);

    int exit_code = kExitOk;
    try {
        std::string out_text;

        if (kcomplex->parsed()) {
            const SubsetCollection I = parse_collection(read_input(opts.input));
            out_text = dump_complex(build_complex(I), opts.pretty);
        } else if (fan->parsed()) {
            const SubsetCollection I = parse_collection(read_input(opts.input));
            out_text = dump_fan(build_fan(build_complex(I)), opts.pretty);
        } else if (primitive->parsed()) {
            const SubsetCollection I = parse_collection(read_input(opts.input));
            const Fan F = build_fan(build_complex(I));
            out_text = dump_index_sets("primitive_sets", I.n, primitive_sets(F), opts.pretty);
        } else if (rsigma->parsed()) {
            const SubsetCollection I = parse_collection(read_input(opts.input));
            json j;
            j["r_sigma"] = r_sigma(build_fan(build_complex(I)));
            out_text = dump_doc(j, opts.pretty);
        } else if (rmin->parsed()) {
            const SubsetCollection I = parse_collection(read_input(opts.input));
            json j;
            j["r_min"] = r_min(I);
            out_text = dump_doc(j, opts.pretty);
        } else if (stabdim->parsed()) {
            if (sd_rmin < 2)
                throw ValidationError("--rmin must be at least 2");
            if (sd_d < 1)
                throw ValidationError("--d must be at least 1");
            json j;
            j["D"] = stability_dim(sd_rmin, sd_d);
            if (sd_n)
                j["Dstar"] = stability_dim_projective(sd_d, *sd_n);
            out_text = dump_doc(j, opts.pretty);
        } else if (bandscan->parsed()) {
            StabilityParams p;
            p.d = bs_d;
            const ScanMode mode =
                bs_mode == "general" ? ScanMode::general : ScanMode::projective;
            if (mode == ScanMode::general) {
                if (!bs_rmin)
                    throw ValidationError("general mode needs --rmin");
                p.r_min = *bs_rmin;
                p.n = bs_n.value_or(p.r_min);
            } else {
                if (!bs_n)
                    throw ValidationError("projective mode needs --n");
                p.n = *bs_n;
                p.r_min = bs_rmin.value_or(p.n);
            }
            const SeedRule rule = bs_seed_rule == "configuration" ? SeedRule::configuration
                                                                  : SeedRule::truncation;
            if (rule == SeedRule::configuration && mode == ScanMode::projective)
                throw ValidationError("--seed-rule applies to general mode only");
            ScanWindow window = ScanWindow::standard(p);
            if (bs_klo)
                window.k_lo = *bs_klo;
            if (bs_khi)
                window.k_hi = *bs_khi;
            if (bs_smax)
                window.s_hi = *bs_smax;
            band_scan(p, mode, window, rule);  // window self-check; throws on dependence
            const BandScanReport report = band_scan_report(p, mode, window, rule);
            out_text = dump_band_report(report, opts.pretty, bs_full_grid);
            if (!report.agree)
                exit_code = kExitPropertyFailure;
        } else if (holcheck->parsed()) {
            json doc = json::parse(read_input(opts.input), nullptr, false);
            if (doc.is_discarded() || !doc.is_object() || !doc.contains("collection") ||
                !doc.contains("tuple"))
                throw ValidationError(
                    "holcheck expects {\"collection\": {...}, \"tuple\": {...}}");
            const SubsetCollection I = parse_collection(doc["collection"].dump());
            const MapTuple F = parse_tuple(doc["tuple"].dump());
            const bool member = F.form() == TupleForm::roots ? member_by_roots(F, I)
                                                             : member_by_gcd(F, I);
            json j;
            j["in_hol"] = member;
            j["discriminant"] = !member;
            out_text = dump_doc(j, opts.pretty);
        } else if (stabilize_cmd->parsed()) {
            json doc = json::parse(read_input(opts.input), nullptr, false);
            if (doc.is_discarded() || !doc.is_object())
                throw ValidationError("stabilize expects a JSON object");
            std::optional<std::vector<GaussianRational>> shifts;
            json tuple_doc;
            if (doc.contains("tuple")) {
                tuple_doc = doc["tuple"];
                if (doc.contains("shift_points")) {
                    if (!doc["shift_points"].is_array())
                        throw ValidationError("shift_points must be an array of strings");
                    std::vector<GaussianRational> pts;
                    for (const json& s : doc["shift_points"]) {
                        if (!s.is_string())
                            throw ValidationError("shift points must be strings");
                        pts.push_back(parse_gaussian(s.get<std::string>()));
                    }
                    shifts = std::move(pts);
                }
            } else {
                tuple_doc = doc;
            }
            const MapTuple F = parse_tuple(tuple_doc.dump());
            out_text = dump_tuple(stabilize(F, shifts), opts.pretty);
        } else if (orbitlimit->parsed()) {
            if (ol_n < 2)
                throw ValidationError("--n must be at least 2");
            const std::vector<long long> u = parse_int_list(ol_u);
            const IndexSet sigma = orbit_limit(u, ol_n);
            json j;
            j["n"] = ol_n;
            j["u"] = u;
            j["sigma"] = sigma.elements();
            out_text = dump_doc(j, opts.pretty);
        } else if (lemma63->parsed()) {
            const SubsetCollection I = parse_collection(read_input(opts.input));
            json j;
            if (!l63_pattern.empty()) {
                const SupportPattern pattern = SupportPattern::from_bits(l63_pattern);
                const bool in_product =
                    in_polyhedral_product(pattern, build_complex(I));
                const bool in_wedge = in_generalized_wedge(pattern, I);
                j["pattern"] = pattern.bits();
                j["in_polyhedral_product"] = in_product;
                j["in_generalized_wedge"] = in_wedge;
                j["holds"] = in_product == in_wedge;
                if (in_product != in_wedge)
                    exit_code = kExitPropertyFailure;
            } else {
                const WedgeIdentityResult result = wedge_identity_check(I);
                j["holds"] = result.holds;
                if (!result.holds) {
                    j["first_failing_pattern"] = result.first_failing->bits();
                    exit_code = kExitPropertyFailure;
                }
            }
            out_text = dump_doc(j, opts.pretty);
        } else if (verify_all->parsed()) {
            limits.seed = resolve_seed(flag_seed);
            limits.validate();
            const std::vector<SuiteResult> suites = run_all_suites(limits);
            json j;
            j["seed"] = limits.seed;
            json jl;
            jl["n_max"] = limits.n_max;
            jl["d_max"] = limits.d_max;
            jl["random_collections"] = limits.random_collections;
            jl["random_tuples"] = limits.random_tuples;
            jl["random_point_sets"] = limits.random_point_sets;
            j["limits"] = std::move(jl);
            bool all_pass = true;
            json js = json::array();
            for (const SuiteResult& suite : suites) {
                json s;
                s["name"] = suite.name;
                s["cases"] = suite.cases;
                s["pass"] = suite.passed();
                s["failures"] = suite.failures;
                all_pass = all_pass && suite.passed();
                js.push_back(std::move(s));
            }
            j["suites"] = std::move(js);
            j["pass"] = all_pass;
            out_text = dump_doc(j, opts.pretty);
            if (!all_pass)
                exit_code = kExitPropertyFailure;
        }

        write_output(opts.output, out_text);
    } catch (const Error& e) {
        json j;
        j["error"] = {{"message", e.what()}, {"type", "validation"}};
        try {
            write_output(opts.output, dump_doc(j, opts.pretty));
        } catch (const std::exception&) {
            std::cerr << dump_doc(j, opts.pretty);
        }
        return kExitValidation;
    } catch (const std::exception& e) {
        json j;
        j["error"] = {{"message", e.what()}, {"type", "internal"}};
        std::cerr << dump_doc(j, opts.pretty);
        return kExitValidation;
    }
    return exit_code;
}
