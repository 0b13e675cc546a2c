// nakit - exact-arithmetic toolkit for nonassociative algebras given by
// structure constants. Every subcommand prints a deterministic plain-text
// report (or TSV with --format tsv) and uses the exit-code convention
//   0: computation succeeded / all checked properties hold
//   1: a checked property is false (a witness is printed)
//   2: usage or parse error

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nakit/algebra_io.hpp"
#include "nakit/corpus.hpp"
#include "nakit/free_quadratic.hpp"
#include "nakit/identities.hpp"
#include "nakit/samples.hpp"
#include "nakit/series.hpp"
#include "nakit/survey.hpp"

using namespace nakit;

namespace {

struct Report {
    bool tsv = false;
    std::ostringstream out;

    void row(const std::string& key, const std::string& value) {
        out << key << (tsv ? "\t" : ": ") << value << "\n";
    }
    void line(const std::string& s) { out << s << "\n"; }
    void print() const { std::cout << out.str(); }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// <file-path> or corpus:<id>
Algebra load_algebra(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) {
        const CorpusEntry* e = find_corpus_entry(spec.substr(7));
        if (!e) throw UsageError("unknown corpus entry '" + spec.substr(7) + "'");
        return e->instantiate();
    }
    return parse_algebra(read_file(spec)).algebra;
}

GroupAlgebraElement vec_arg(const std::string& s) {
    auto v = try_parse_vector(s);
    if (!v) throw UsageError("bad vector literal '" + s + "'");
    return *v;
}

TruncatedSeries series_arg(const std::string& s) {
    auto t = try_parse_series(s);
    if (!t) throw UsageError("bad series literal '" + s + "'");
    return *t;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string tuple_str(const std::array<std::size_t, 3>& t) {
    return "(e" + std::to_string(t[0] + 1) + ",e" + std::to_string(t[1] + 1) + ",e" +
           std::to_string(t[2] + 1) + ")";
}

// cocycle/deformation flavor literals: h | aa | v:<vec> | av:<vec> | lr:<vec>;<vec>
CoboundaryFlavor cocycle_flavor_arg(const std::string& s) {
    if (s == "h") return CoboundaryFlavor::hochschild();
    if (s == "aa") return CoboundaryFlavor::anti();
    if (s.rfind("v:", 0) == 0) return CoboundaryFlavor::v_twisted(vec_arg(s.substr(2)));
    if (s.rfind("av:", 0) == 0)
        return CoboundaryFlavor::v_twisted(vec_arg(s.substr(3)), CoboundaryFlavor::Base::Anti);
    if (s.rfind("lr:", 0) == 0) {
        auto semi = s.find(';');
        if (semi == std::string::npos) throw UsageError("lr flavor needs '<vec>;<vec>'");
        return CoboundaryFlavor::lr(vec_arg(s.substr(3, semi - 3)), vec_arg(s.substr(semi + 1)));
    }
    throw UsageError("bad cocycle flavor '" + s + "' (expect h | aa | v:<vec> | av:<vec> | lr:<vec>;<vec>)");
}

int cmd_vector(const std::string& action, const std::string& literal, const std::string& target,
               Report& rep) {
    GroupAlgebraElement v = vec_arg(literal);
    if (v.is_zero()) throw UsageError("the zero vector has no orbit data");
    if (action == "rank") {
        rep.row("dim F_v", std::to_string(fv_rank(v)));
        return 0;
    }
    if (action == "contains") {
        CharacterTarget t = target == "v3pa" ? CharacterTarget::V3Pa : CharacterTarget::VLad;
        auto r = contains(v, t);
        rep.row(std::string("contains ") + (t == CharacterTarget::VLad ? "v_Lad" : "v_3Pa"),
                yn(r.contained));
        if (r.certificate) rep.row("certificate u (u*v = target)", to_string(*r.certificate));
        return r.contained ? 0 : 1;
    }
    // classify
    auto c = classify_vector(v);
    rep.row("dim F_v", std::to_string(c.dim_fv));
    rep.row("contains v_Lad", yn(c.has_vlad));
    rep.row("contains v_3Pa", yn(c.has_v3pa));
    rep.row("type", to_string(c.type));
    return 0;
}

int cmd_check(const std::string& identity, const std::string& source, Report& rep) {
    Algebra a = load_algebra(source);
    std::string name = identity;
    for (auto& ch : name)
        if (ch == '-') ch = '_';
    bool ok = check_identity(a, name);
    rep.row(identity, ok ? "pass" : "fail");
    if (!ok) {
        if (auto w = identity_witness(a, name)) rep.row("witness", *w);
    }
    return ok ? 0 : 1;
}

int cmd_polarize(const std::string& source, Report& rep) {
    Algebra a = load_algebra(source);
    auto [rho, psi] = polarize(a);
    rep.line("# rho (symmetric part)");
    rep.line(serialize_algebra(rho));
    rep.line("# psi (skew-symmetric part)");
    rep.line(serialize_algebra(psi));
    return 0;
}

int cmd_cocycles(const std::string& flavor, const std::string& source, Report& rep) {
    Algebra a = load_algebra(source);
    auto cs = cocycle_basis(a, cocycle_flavor_arg(flavor));
    rep.row("dimension", std::to_string(cs.dimension));
    for (std::size_t i = 0; i < cs.basis.size(); ++i) {
        rep.line("# cocycle " + std::to_string(i + 1));
        rep.line(serialize_algebra(cs.basis[i]));
    }
    return 0;
}

int cmd_deform_verify(const std::string& flavor, const std::string& path,
                      std::size_t through_order, Report& rep) {
    TruncatedDeformation def = parse_deformation(read_file(path));
    std::size_t k = std::min<std::size_t>(through_order, def.order());
    VerifyReport vr;
    if (flavor.rfind("vw:", 0) == 0) {
        auto semi = flavor.find(';');
        if (semi == std::string::npos) throw UsageError("vw flavor needs '<vec>;<vec>'");
        GroupAlgebraElement v = vec_arg(flavor.substr(3, semi - 3));
        GroupAlgebraElement w = vec_arg(flavor.substr(semi + 1));
        vr = vw_verify(def, v, w, std::min<std::size_t>(k, 2));
    } else if (flavor == "plain") {
        vr = verify(def, BulletFlavor::plain(), k);
    } else if (flavor.rfind("v:", 0) == 0) {
        vr = verify(def, BulletFlavor::twisted(vec_arg(flavor.substr(2))), k);
    } else {
        throw UsageError("bad deformation flavor '" + flavor + "' (expect plain | v:<vec> | vw:<vec>;<vec>)");
    }
    bool all = vr.all_zero();
    for (const auto& o : vr.orders) {
        std::string v = o.zero ? "zero" : ("nonzero, first at " + tuple_str(*o.witness));
        rep.row("order " + std::to_string(o.order), v);
    }
    rep.row("verified", yn(all));
    return all ? 0 : 1;
}

int cmd_free(const std::string& preset, const std::string& file, std::size_t gens,
             std::size_t maxdeg, std::optional<std::size_t> multilinear, bool with_unit,
             bool show_basis, Report& rep) {
    std::optional<Presentation> p;
    if (!file.empty()) {
        p = parse_presentation(read_file(file));
        if (gens) p->generators = gens;
    } else if (!preset.empty()) {
        p = preset_presentation(preset, gens ? gens : 1);
        if (!p) throw UsageError("unknown preset '" + preset + "'");
    } else {
        throw UsageError("free needs --preset or --file");
    }
    if (multilinear) {
        rep.row("multilinear dim(" + std::to_string(*multilinear) + ")",
                std::to_string(multilinear_dim(*p, *multilinear)));
        return 0;
    }
    GradedBasis g = graded_basis(*p, maxdeg);
    std::string dims;
    if (with_unit) dims = "1, ";
    for (std::size_t d = 0; d < g.dims.size(); ++d)
        dims += (d ? ", " : "") + std::to_string(g.dims[d]);
    rep.row("dims by degree" + std::string(with_unit ? " (with unit)" : ""), dims);
    if (show_basis)
        for (std::size_t d = 1; d <= maxdeg; ++d) {
            std::string line = "degree " + std::to_string(d) + ":";
            for (const auto& m : g.monomials[d - 1]) line += " [" + m + "]";
            rep.line(line);
        }
    return 0;
}

int cmd_series(const std::string& action, const std::vector<std::string>& args, Report& rep) {
    if (action == "inverse") {
        if (args.size() != 1) throw UsageError("series inverse needs one series literal");
        rep.row("inverse", to_string(comp_inverse(series_arg(args[0]))));
        return 0;
    }
    if (action == "compose") {
        if (args.size() != 2) throw UsageError("series compose needs two series literals");
        rep.row("composition", to_string(compose(series_arg(args[0]), series_arg(args[1]))));
        return 0;
    }
    if (action == "koszul") {
        if (args.size() != 2) throw UsageError("series koszul needs gP and gDual");
        auto r = koszul_check(series_arg(args[0]), series_arg(args[1]));
        rep.row("functional equation", r.clean ? "clean to truncation order"
                                               : "fails at order " + std::to_string(r.first_failure_order) +
                                                     " (residual " + to_string(r.residual_coeff) + ")");
        rep.row("inverse vs dual",
                r.inverse_matches_dual
                    ? "match to truncation order"
                    : "mismatch at order " + std::to_string(r.inverse_mismatch_order) + " (" +
                          to_string(r.inverse_coeff) + " vs " + to_string(r.dual_coeff) + ")");
        return r.clean ? 0 : 1;
    }
    throw UsageError("unknown series action '" + action + "'");
}

int cmd_corpus(const std::string& action, const std::string& id, Report& rep) {
    if (action == "list") {
        for (const auto& e : corpus()) rep.row(e.id, e.description);
        return 0;
    }
    const CorpusEntry* e = find_corpus_entry(id);
    if (!e) throw UsageError("unknown corpus entry '" + id + "'");
    rep.line("# " + e->id + ": " + e->description);
    rep.line(e->text);
    return 0;
}

int cmd_survey(Report& rep) {
    bool all = true;
    for (const auto& r : survey()) {
        std::string d = r.deformation_claim.empty()
                            ? "-"
                            : r.deformation_claim + " [" +
                                  (*r.deformation_agrees ? "agree" : "DISAGREE") + "]";
        std::string p = r.polarization_claim.empty()
                            ? "-"
                            : r.polarization_claim + " [" +
                                  (*r.polarization_agrees ? "agree" : "DISAGREE") + "]";
        if (rep.tsv)
            rep.line(r.family + "\t" + d + "\t" + p);
        else
            rep.line(r.family + "\n  deformation:  " + d + "\n  polarization: " + p);
        if (r.deformation_agrees && !*r.deformation_agrees) all = false;
        if (r.polarization_agrees && !*r.polarization_agrees) all = false;
    }
    rep.row("survey", all ? "all rows agree" : "disagreement found");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nakit: exact checks for nonassociative algebra identities, deformations and operads"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));

    // vector classify|rank|contains
    auto* vc = app.add_subcommand("vector", "group-algebra vector classification");
    vc->require_subcommand(1);
    std::string vec_literal, target = "vlad";
    for (const char* act : {"classify", "rank", "contains"}) {
        auto* sub = vc->add_subcommand(act);
        sub->add_option("vector", vec_literal, "six comma-separated rationals or an alias")
            ->required();
        if (std::string(act) == "contains")
            sub->add_option("--target", target, "vlad or v3pa")
                ->check(CLI::IsMember({"vlad", "v3pa"}));
    }

    // check --identity <name> <file|corpus:id>
    auto* ck = app.add_subcommand("check", "evaluate a named identity on an algebra");
    std::string identity, source;
    ck->add_option("--identity", identity, "identity name")->required();
    ck->add_option("algebra", source, "algebra file or corpus:<id>")->required();

    // polarize <file|corpus:id>
    auto* pz = app.add_subcommand("polarize", "split an algebra into symmetric + skew parts");
    std::string pz_source;
    pz->add_option("algebra", pz_source, "algebra file or corpus:<id>")->required();

    // cocycles --flavor <...> <file|corpus:id>
    auto* cz = app.add_subcommand("cocycles", "basis of the degree-2 cocycle space");
    std::string cz_flavor, cz_source;
    cz->add_option("--flavor", cz_flavor, "h | aa | v:<vec> | av:<vec> | lr:<vec>;<vec>")
        ->required();
    cz->add_option("algebra", cz_source, "algebra file or corpus:<id>")->required();

    // deform verify --flavor <...> <file>
    auto* df = app.add_subcommand("deform", "truncated formal deformations");
    auto* dv = df->add_subcommand("verify", "order-by-order residuals");
    std::string dv_flavor = "plain", dv_path;
    std::size_t dv_order = 2;
    dv->add_option("--flavor", dv_flavor, "plain | v:<vec> | vw:<vec>;<vec>");
    dv->add_option("--through-order", dv_order, "highest order to check");
    dv->add_option("file", dv_path, "deformation file with order sections")->required();

    // free --preset ... --gens ... --max-deg ... [--multilinear k]
    auto* fr = app.add_subcommand("free", "degree-truncated free quadratic algebras");
    std::string fr_preset, fr_file;
    std::size_t fr_gens = 0, fr_maxdeg = 4;
    std::optional<std::size_t> fr_multi;
    bool fr_unit = false, fr_basis = false;
    fr->add_option("--preset", fr_preset,
                   "jacobi-jordan | anti-associative | aas | lie | associative");
    fr->add_option("--file", fr_file, "presentation file (gens/symmetry/rel lines)");
    fr->add_option("--gens", fr_gens, "generator count");
    fr->add_option("--max-deg", fr_maxdeg, "truncation degree");
    fr->add_option("--multilinear", fr_multi, "report the multilinear component on k letters");
    fr->add_flag("--with-unit", fr_unit, "prepend the unit to the reported dimensions");
    fr->add_flag("--basis", fr_basis, "list basis monomials per degree");

    // series inverse|compose|koszul
    auto* se = app.add_subcommand("series", "truncated power series over exact rationals");
    se->require_subcommand(1);
    std::vector<std::string> se_args;
    for (const char* act : {"inverse", "compose", "koszul"}) {
        auto* sub = se->add_subcommand(act);
        sub->add_option("coeffs", se_args, "series literals c1,c2,...")->required();
    }

    // corpus list|show
    auto* co = app.add_subcommand("corpus", "built-in example algebras");
    co->require_subcommand(1);
    co->add_subcommand("list");
    std::string co_id;
    co->add_subcommand("show")->add_option("id", co_id, "corpus entry id")->required();

    // survey
    app.add_subcommand("survey", "deformation vs polarization summary table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report rep;
    rep.tsv = format == "tsv";
    int rc = 0;
    try {
        if (vc->parsed()) {
            for (const char* act : {"classify", "rank", "contains"})
                if (vc->get_subcommand(act)->parsed())
                    rc = cmd_vector(act, vec_literal, target, rep);
        } else if (ck->parsed()) {
            rc = cmd_check(identity, source, rep);
        } else if (pz->parsed()) {
            rc = cmd_polarize(pz_source, rep);
        } else if (cz->parsed()) {
            rc = cmd_cocycles(cz_flavor, cz_source, rep);
        } else if (df->parsed()) {
            rc = cmd_deform_verify(dv_flavor, dv_path, dv_order, rep);
        } else if (fr->parsed()) {
            rc = cmd_free(fr_preset, fr_file, fr_gens, fr_maxdeg, fr_multi, fr_unit, fr_basis, rep);
        } else if (se->parsed()) {
            for (const char* act : {"inverse", "compose", "koszul"})
                if (se->get_subcommand(act)->parsed()) rc = cmd_series(act, se_args, rep);
        } else if (co->parsed()) {
            rc = cmd_corpus(co->get_subcommand("list")->parsed() ? "list" : "show", co_id, rep);
        } else if (app.get_subcommand("survey")->parsed()) {
            rc = cmd_survey(rep);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    rep.print();
    return rc;
}
