// Command line front end: exact rank-1 coupling coefficients, the 4x4
// generator-table checker, relation derivation, and the closed-form verify
// sweep.  Exit codes: 0 success / all checks pass, 1 a verification
// comparison failed, 2 usage or domain error.

#include <CLI11.hpp>

#include "o4tensor/clebsch_gordan.hpp"
#include "o4tensor/golden_o4.hpp"
#include "o4tensor/json_io.hpp"
#include "o4tensor/o4_generators.hpp"
#include "o4tensor/recurrence.hpp"
#include "o4tensor/reference_forms.hpp"
#include "o4tensor/verify.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace o4tensor;

std::string approx8(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", v);
    return buf;
}

std::string factors_str(const std::vector<ReducedSymbol>& fs) {
    std::string s;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i) s += "*";
        s += fs[i].str();
    }
    return s;
}

// Registers --NAME (half-integer spelling) and --two-NAME (doubled integer)
// and returns a getter that demands exactly one of them.
std::function<HalfInt()> add_half_option(CLI::App* cmd, const std::string& name,
                                         const std::string& desc) {
    auto text = std::make_shared<std::string>();
    auto twice = std::make_shared<long>(0);
    auto* ot = cmd->add_option("--" + name, *text, desc + " (e.g. 2, 3/2, or 1.5)");
    auto* o2 = cmd->add_option("--two-" + name, *twice, "twice " + desc + " (integer)");
    ot->excludes(o2);
    o2->excludes(ot);
    return [ot, o2, text, twice, name]() -> HalfInt {
        if (ot->count()) return HalfInt::parse(*text);
        if (o2->count()) return HalfInt::from_twice(*twice);
        throw std::invalid_argument("missing --" + name + " (or --two-" + name + ")");
    };
}

Convention parse_convention(const std::string& s) {
    if (s == "standard") return Convention::Standard;
    if (s == "paper") return Convention::BraFirst;  // the bra-first factorization
    throw std::invalid_argument("unknown convention '" + s + "' (want standard or paper)");
}

int run_cg(const std::string& format, const std::vector<std::function<HalfInt()>>& get) {
    ExactSum v = cg(get[0](), get[1](), get[2](), get[3](), get[4](), get[5]());
    if (format == "json") {
        Json j;
        j["exact"] = to_json(v);
        j["text"] = v.str();
        j["approx"] = v.to_double();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "exact,approx\n" << v.str() << "," << approx8(v.to_double()) << "\n";
    } else {
        std::cout << v.str() << " = " << approx8(v.to_double()) << "\n";
    }
    return 0;
}

int run_check_o4(const std::string& format, const std::string& variant, bool perturb) {
    std::vector<TVariant> variants;
    if (variant == "both")
        variants = {TVariant::AsPrinted, TVariant::ImaginaryT};
    else
        variants = {parse_variant(variant)};

    std::vector<RelationReport> reports;
    for (TVariant v : variants) {
        GeneratorSet g = build_generators(v);
        if (perturb) g.jp1 = -g.jp1;
        reports.push_back(check_relations(g));
    }

    Json computed;
    if (variant == "both") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        computed = Json{{"variants", std::move(arr)}};
    } else {
        computed = to_json(reports[0]);
    }

    // Compare against the frozen report.  The full two-variant run must
    // reproduce it byte for byte; a single-variant run is compared as a
    // JSON value against its block.
    bool matches = false;
    const std::string golden_text = golden_check_o4_json();
    if (variant == "both") {
        matches = computed.dump(2) + "\n" == golden_text;
    } else {
        Json golden = Json::parse(golden_text, nullptr, false);
        if (golden.is_object() && golden.contains("variants"))
            for (const auto& block : golden["variants"])
                if (block.value("variant", "") == variant_name(reports[0].variant))
                    matches = block == computed;
    }

    if (format == "json") {
        std::cout << computed.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "variant,block,id,passes\n";
        for (const auto& rep : reports)
            for (const auto& c : rep.checks)
                std::cout << variant_name(rep.variant) << "," << c.block << ",\"" << c.id
                          << "\"," << (c.passes ? "true" : "false") << "\n";
    } else {
        for (const auto& rep : reports) {
            std::cout << "variant " << variant_name(rep.variant) << "\n";
            size_t held = 0;
            for (const auto& c : rep.checks) {
                std::cout << "  " << (c.passes ? "PASS" : "FAIL") << "  [" << c.block << "] "
                          << c.id << "\n";
                held += c.passes;
            }
            std::cout << "  " << held << "/" << rep.checks.size() << " relations hold\n";
        }
        std::cout << "golden match: " << (matches ? "yes" : "no") << "\n";
    }
    return matches ? 0 : 1;
}

int run_derive(const std::string& format, HalfInt l, Convention conv, bool symmetrized) {
    StatePair states = recurrence_probe_states(l);
    CommutatorSpec spec = lowering_pair_commutator();
    std::vector<ProductTerm> products = expand_products(states, spec, conv);
    Relation rel = derive_relation(spec, states, conv);
    if (symmetrized) rel = symmetrize(rel);

    if (format == "json") {
        Json j;
        j["l"] = to_json(l);
        j["convention"] = convention_name(conv);
        j["symmetrized"] = symmetrized;
        Json prods = Json::array();
        for (const auto& p : products) {
            Json jp;
            jp["ordering"] = p.ordering;
            jp["l_mid"] = to_json(p.l_mid);
            jp["coef"] = to_json(p.coef);
            Json fs = Json::array();
            for (const auto& f : p.factors)
                fs.push_back(Json::array({to_json(f.bra_l), to_json(f.ket_l)}));
            jp["factors"] = std::move(fs);
            prods.push_back(std::move(jp));
        }
        j["products"] = std::move(prods);
        j["relation"] = to_json(rel);
        j["relation_text"] = rel.str();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "kind,ordering,l_mid,coef,factors\n";
        for (const auto& p : products)
            std::cout << "product," << p.ordering << "," << p.l_mid.str() << ",\""
                      << p.coef.str() << "\"," << factors_str(p.factors) << "\n";
        for (const auto& t : rel.terms)
            std::cout << "term,,,\"" << t.coef.str() << "\"," << factors_str(t.factors) << "\n";
        std::cout << "rhs,,,\"" << rel.rhs.str() << "\",\n";
    } else {
        std::cout << "l = " << l.str() << ", convention = " << convention_name(conv)
                  << ", symmetrized = " << (symmetrized ? "yes" : "no") << "\n";
        std::cout << "products:\n";
        for (const auto& p : products)
            std::cout << "  ordering " << p.ordering << "  l_mid " << p.l_mid.str() << "  ("
                      << p.coef.str() << ")*" << factors_str(p.factors) << "\n";
        std::cout << "relation: " << rel.str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& format, const IrrepSpec& spec, long lmin, long lmax,
               Convention conv, bool symmetrized) {
    VerifyReport report = verify_closed_form(spec, lmin, lmax, conv, symmetrized);

    if (format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "l,engine_vs_oracle,tabulated_ratio,bra_first_extraction,relation\n";
        for (const auto& r : report.rows)
            std::cout << r.l << "," << r.engine_vs_oracle << "," << r.tabulated_ratio << ","
                      << r.bra_first_extraction << ",\"" << r.relation.str() << "\"\n";
    } else {
        std::cout << "spec " << spec.str() << "  l in [" << lmin << "," << lmax
                  << "]  convention " << convention_name(conv)
                  << (symmetrized ? "  symmetrized" : "") << "\n";
        for (const auto& r : report.rows) {
            std::cout << "l=" << r.l << "  engine_vs_oracle=" << r.engine_vs_oracle
                      << "  tabulated_ratio=" << r.tabulated_ratio
                      << "  bra_first_extraction=" << r.bra_first_extraction << "\n";
        }
        std::cout << "all engine rows pass: " << (report.all_engine_pass() ? "yes" : "no")
                  << "\n";
    }
    return report.all_engine_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank-1 tensor algebra for coupled representations"};
    app.require_subcommand(1);
    int rc = 0;

    // cg
    auto* cg_cmd = app.add_subcommand("cg", "one coupling coefficient <j1 m1; j2 m2 | j m>");
    std::string cg_format = "text";
    cg_cmd->add_option("--format", cg_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    std::vector<std::function<HalfInt()>> cg_get;
    for (const char* n : {"j1", "m1", "j2", "m2", "j", "m"})
        cg_get.push_back(add_half_option(cg_cmd, n, n));
    cg_cmd->callback([&] { rc = run_cg(cg_format, cg_get); });

    // check-o4
    auto* o4_cmd = app.add_subcommand(
        "check-o4", "evaluate the 4x4 generator commutation table against the frozen report");
    std::string o4_format = "text", o4_variant = "both";
    bool o4_perturb = false;
    o4_cmd->add_option("--format", o4_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    o4_cmd->add_option("--variant", o4_variant, "which T build to check")
        ->check(CLI::IsMember({"as-printed", "imaginary-t", "both"}));
    o4_cmd->add_flag("--perturb", o4_perturb,
                     "flip the sign of J+1 before checking (exercises the golden comparison)");
    o4_cmd->callback([&] { rc = run_check_o4(o4_format, o4_variant, o4_perturb); });

    // derive
    auto* derive_cmd =
        app.add_subcommand("derive", "derive the reduced-element relation at one l");
    std::string derive_format = "text", derive_conv = "standard";
    bool derive_symm = false;
    derive_cmd->add_option("--format", derive_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    derive_cmd->add_option("--convention", derive_conv, "standard or paper (bra-first)")
        ->check(CLI::IsMember({"standard", "paper"}));
    derive_cmd->add_flag("--symmetrize", derive_symm, "identify R(a,b) with R(b,a)");
    auto derive_l = add_half_option(derive_cmd, "l", "multiplet label l (>= 1)");
    derive_cmd->callback([&] {
        rc = run_derive(derive_format, derive_l(), parse_convention(derive_conv), derive_symm);
    });

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "sweep l, substituting explicit-representation reduced elements");
    std::string verify_format = "text", verify_conv = "standard", verify_spec;
    long lmin = 0, lmax = 0;
    bool verify_symm = false;
    verify_cmd->add_option("--format", verify_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_option("--spec", verify_spec, "representation as j1,j2 (e.g. 13/2,11/2)")
        ->required();
    verify_cmd->add_option("--lmin", lmin, "first l of the sweep")->required();
    verify_cmd->add_option("--lmax", lmax, "last l of the sweep")->required();
    verify_cmd->add_option("--convention", verify_conv, "standard or paper (bra-first)")
        ->check(CLI::IsMember({"standard", "paper"}));
    verify_cmd->add_flag("--symmetrize", verify_symm, "identify R(a,b) with R(b,a)");
    verify_cmd->callback([&] {
        auto comma = verify_spec.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--spec wants j1,j2 (e.g. 13/2,11/2)");
        IrrepSpec spec{HalfInt::parse(verify_spec.substr(0, comma)),
                       HalfInt::parse(verify_spec.substr(comma + 1))};
        rc = run_verify(verify_format, spec, lmin, lmax, parse_convention(verify_conv),
                        verify_symm);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0; any parse problem is a usage error
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
