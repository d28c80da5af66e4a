#include "mdlie/catalog.hpp"
#include "mdlie/errors.hpp"
#include "mdlie/invariants.hpp"
#include "mdlie/json_io.hpp"
#include "mdlie/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace mdlie;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kNotLie = 3, kPrecondition = 4 };

struct Common {
    int radius = 2;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    bool json = false;
    std::string out;

    GridSpec grid() const { return GridSpec{radius, samples, seed}; }
};

void add_grid_flags(CLI::App* cmd, Common& c) {
    cmd->add_option("--grid-radius", c.radius, "grid radius")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", c.samples, "extra random covectors");
    cmd->add_option("--seed", c.seed, "seed for the random covectors");
}

void add_output_flags(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "emit JSON");
    cmd->add_option("-o", c.out, "write output to FILE");
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw InputError(c.out + ": cannot write");
    f << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VectorQ parse_covector(const std::string& text) {
    VectorQ v;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        v.push_back(Rational::parse(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return v;
}

int cmd_check(const std::string& file, const Common& c) {
    const LieAlgebra g = load_algebra(file);
    const InstanceRecord r = analyze(g, file, c.grid());
    emit(c, c.json ? dump(to_json(r)) : render_text(r));
    if (!r.jacobi.ok) {
        if (c.json || !c.out.empty())
            std::cerr << "Jacobi identity fails at (" << r.jacobi.triple[0] + 1 << "," << r.jacobi.triple[1] + 1 << ","
                      << r.jacobi.triple[2] + 1 << ")\n";
        return kNotLie;
    }
    return kOk;
}

int cmd_orbit_dim(const std::string& file, const std::string& fstr, bool show_matrix, const Common& c) {
    const LieAlgebra g = load_algebra(file);
    g.require_lie("orbit-dim");
    const Covector f{parse_covector(fstr)};
    if (f.dim() != g.dim())
        throw InputError("covector has " + std::to_string(f.dim()) + " coordinates, algebra has dimension " +
                         std::to_string(g.dim()));
    const MatrixQ b = b_form_at(g, f);
    const std::size_t d = orbit_dim(g, f);
    if (c.json) {
        Json out{{"F", to_json(f.coords)}, {"orbit_dim", d}};
        if (show_matrix) out["B"] = to_json(b);
        emit(c, dump(out));
    } else {
        std::string text = std::to_string(d) + "\n";
        if (show_matrix) text += b.str() + "\n";
        emit(c, text);
    }
    return kOk;
}

int cmd_catalog_build(const std::string& id, const std::string& params, const Common& c) {
    const LieAlgebra g = build(parse_family_id(id), FamilyParams::parse(params));
    emit(c, dump(to_json(g)));
    return kOk;
}

int cmd_verify_catalog(const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const CatalogReport rep = verify_catalog(c.grid());
    if (c.json) {
        emit(c, dump(to_json(rep)));
    } else {
        std::ostringstream os;
        os << render_text(rep);
        os.precision(3);
        os << "runtime " << seconds_since(t0) << " s\n";
        emit(c, os.str());
    }
    return rep.ok ? kOk : kFailure;
}

int cmd_fingerprint(const std::string& file, const Common& c) {
    const LieAlgebra g = load_algebra(file);
    emit(c, dump(to_json(fingerprint(g))));
    return kOk;
}

IsoResult run_iso(const LieAlgebra& a, const LieAlgebra& b) {
    const Fingerprint fa = fingerprint(a);
    const Fingerprint fb = fingerprint(b);
    if (auto field = first_difference(fa, fb)) return NotIso{*field, "fingerprints differ"};
    try {
        return iso_test_codim1(a, b);
    } catch (const PreconditionError&) {
        return iso_test_central_split(a, b);
    }
}

int cmd_iso(const std::string& fa, const std::string& fb, const Common& c) {
    const LieAlgebra a = load_algebra(fa);
    const LieAlgebra b = load_algebra(fb);
    const IsoResult r = run_iso(a, b);
    if (c.json) {
        emit(c, dump(to_json(r)));
    } else if (const auto* iso = std::get_if<Iso>(&r)) {
        emit(c, "Iso\nwitness (columns are the images of the new basis in A's coordinates):\n" + iso->witness.str() + "\n");
    } else if (const auto* no = std::get_if<NotIso>(&r)) {
        emit(c, "NotIso: " + no->field + " (" + no->detail + ")\n");
    } else {
        emit(c, "Inconclusive: " + std::get<IsoInconclusive>(r).reason + "\n");
    }
    return kOk;
}

int cmd_separate(const std::vector<std::string>& files, const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<NamedAlgebra> instances;
    if (files.empty()) {
        for (const Sample& s : family_representatives()) instances.push_back({s.label(), build(s.id, s.params)});
    } else {
        for (const auto& f : files) instances.push_back({f, load_algebra(f)});
    }
    const SeparationReport rep = separation_matrix(instances);
    if (c.json) {
        emit(c, dump(to_json(rep)));
        return kOk;
    }
    std::ostringstream os;
    std::size_t separated = 0, iso = 0, unresolved = 0;
    for (const auto& p : rep.pairs) {
        if (p.outcome == "separated") {
            ++separated;
            continue;
        }
        (p.outcome == "iso-witnessed" ? iso : unresolved)++;
        os << rep.labels[p.a] << " vs " << rep.labels[p.b] << ": " << p.outcome;
        if (!p.field.empty()) os << " (" << p.field << ")";
        os << "\n";
    }
    os << rep.pairs.size() << " pairs: " << separated << " separated, " << iso << " iso-witnessed, " << unresolved
       << " unresolved\n";
    os.precision(3);
    os << "runtime " << seconds_since(t0) << " s\n";
    emit(c, os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kirillov-form analysis of solvable Lie algebras"};
    app.require_subcommand(1);
    Common c;

    std::string file, file_b, fstr, id, params;
    std::vector<std::string> files;
    bool show_matrix = false;

    auto* check = app.add_subcommand("check", "validate an algebra file and decide the MD property");
    check->add_option("file", file, "algebra JSON")->required();
    add_grid_flags(check, c);
    add_output_flags(check, c);

    auto* orbit = app.add_subcommand("orbit-dim", "coadjoint orbit dimension through F");
    orbit->add_option("file", file, "algebra JSON")->required();
    orbit->add_option("--f", fstr, "covector, comma separated rationals")->required();
    orbit->add_flag("--show-matrix", show_matrix, "print B_F");
    add_output_flags(orbit, c);

    auto* catalog = app.add_subcommand("catalog", "catalog instances");
    catalog->require_subcommand(1);
    auto* cbuild = catalog->add_subcommand("build", "write an algebra file for a family");
    cbuild->add_option("id", id, "family id, e.g. 5.4.6")->required();
    cbuild->add_option("params", params, "e.g. l1=2,l2=3,mu=1,angle=3/5:4/5");
    cbuild->add_option("-o", c.out, "write output to FILE");

    auto* verify = app.add_subcommand("verify-catalog", "run the full catalog verification");
    add_grid_flags(verify, c);
    add_output_flags(verify, c);

    auto* fp = app.add_subcommand("fingerprint", "basis-invariant fingerprint");
    fp->add_option("file", file, "algebra JSON")->required();
    add_output_flags(fp, c);

    auto* iso = app.add_subcommand("iso", "isomorphism test");
    iso->add_option("a", file, "algebra JSON")->required();
    iso->add_option("b", file_b, "algebra JSON")->required();
    add_output_flags(iso, c);

    auto* sep = app.add_subcommand("separate", "pairwise separation (default: one sample per family)");
    sep->add_option("files", files, "algebra JSON files");
    add_output_flags(sep, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(file, c);
        if (*orbit) return cmd_orbit_dim(file, fstr, show_matrix, c);
        if (*cbuild) return cmd_catalog_build(id, params, c);
        if (*verify) return cmd_verify_catalog(c);
        if (*fp) return cmd_fingerprint(file, c);
        if (*iso) return cmd_iso(file, file_b, c);
        if (*sep) return cmd_separate(files, c);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const NotLieAlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotLie;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kFailure;
}
