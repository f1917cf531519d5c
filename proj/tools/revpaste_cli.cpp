// Command-line front end: every operator of the library plus the law verifier.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "revpaste/crossn.hpp"
#include "revpaste/json_io.hpp"
#include "revpaste/transform.hpp"
#include "revpaste/verifier.hpp"

using nlohmann::json;

namespace {

struct Common {
    std::string field = "q";
    bool as_json = false;
    rp::FieldTag tag() const { return rp::FieldTag::parse(field); }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--field", c.field, "field selector: q, gf:p or f64");
    cmd->add_flag("--json", c.as_json, "emit JSON instead of plain text");
}

void emit_vector(const Common& c, const rp::Vector& v) {
    if (c.as_json)
        std::cout << rp::to_json(v).dump() << "\n";
    else
        std::cout << v.to_string() << "\n";
}

void emit_matrix(const Common& c, const rp::Matrix& A) {
    if (c.as_json)
        std::cout << rp::to_json(A).dump() << "\n";
    else
        std::cout << A.to_string() << "\n";
}

void emit_poly(const Common& c, const rp::Poly& P) {
    if (c.as_json)
        std::cout << rp::to_json(P).dump() << "\n";
    else
        std::cout << P.to_string() << "\n";
}

rp::Matrix load_matrix(const Common& c, const std::string& inline_text, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw rp::Error("cannot open " + file);
        json j;
        in >> j;
        return rp::matrix_from_json(j, c.tag());
    }
    return rp::parse_matrix(c.tag(), inline_text);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact reversing/pasting calculus over vectors, polynomials and matrices"};
    app.require_subcommand(1);

    // ---- vec ---------------------------------------------------------------
    auto* vec = app.add_subcommand("vec", "vector operations");
    vec->require_subcommand(1);
    struct {
        Common c;
        std::string a, b;
        std::size_t n = 0;
        std::string kind = "pal";
    } v;

    auto* vrev = vec->add_subcommand("reverse", "reverse a vector");
    add_common(vrev, v.c);
    vrev->add_option("vector", v.a)->required();
    vrev->callback([&] { emit_vector(v.c, rp::reverse_vector(rp::parse_vector(v.c.tag(), v.a))); });

    auto* vpaste = vec->add_subcommand("paste", "concatenate two vectors");
    add_common(vpaste, v.c);
    vpaste->add_option("left", v.a)->required();
    vpaste->add_option("right", v.b)->required();
    vpaste->callback([&] {
        emit_vector(v.c, rp::paste_vectors(rp::parse_vector(v.c.tag(), v.a),
                                           rp::parse_vector(v.c.tag(), v.b)));
    });

    auto* vdot = vec->add_subcommand("dot", "dot product");
    add_common(vdot, v.c);
    vdot->add_option("left", v.a)->required();
    vdot->add_option("right", v.b)->required();
    vdot->callback([&] {
        rp::Scalar d = rp::dot(rp::parse_vector(v.c.tag(), v.a), rp::parse_vector(v.c.tag(), v.b));
        if (v.c.as_json)
            std::cout << json(d.to_string()).dump() << "\n";
        else
            std::cout << d.to_string() << "\n";
    });

    auto* vcross = vec->add_subcommand("cross3", "classical cross product in K^3");
    add_common(vcross, v.c);
    vcross->add_option("left", v.a)->required();
    vcross->add_option("right", v.b)->required();
    vcross->callback([&] {
        emit_vector(v.c, rp::cross3(rp::parse_vector(v.c.tag(), v.a),
                                    rp::parse_vector(v.c.tag(), v.b)));
    });

    auto* vdec = vec->add_subcommand("decompose", "palindromic + antipalindromic parts");
    add_common(vdec, v.c);
    vdec->add_option("vector", v.a)->required();
    vdec->callback([&] {
        rp::PalAntiPair d = rp::decompose(rp::parse_vector(v.c.tag(), v.a));
        if (v.c.as_json)
            std::cout << json{{"pal", rp::to_json(d.pal)}, {"anti", rp::to_json(d.anti)}}.dump()
                      << "\n";
        else
            std::cout << "pal: " << d.pal.to_string() << "\nanti: " << d.anti.to_string() << "\n";
    });

    auto* vbasis = vec->add_subcommand("basis", "palindromic/antipalindromic subspace basis");
    add_common(vbasis, v.c);
    vbasis->add_option("--n", v.n, "vector length")->required();
    vbasis->add_option("--kind", v.kind, "pal or anti");
    vbasis->callback([&] {
        auto basis = v.kind == "anti" ? rp::antipalindromic_basis(v.n, v.c.tag())
                                      : rp::palindromic_basis(v.n, v.c.tag());
        if (v.c.as_json) {
            json arr = json::array();
            for (const auto& b : basis) arr.push_back(rp::to_json(b));
            std::cout << arr.dump() << "\n";
        } else {
            for (const auto& b : basis) std::cout << b.to_string() << "\n";
        }
    });

    // ---- poly --------------------------------------------------------------
    auto* poly = app.add_subcommand("poly", "polynomial operations (ascending coefficients)");
    poly->require_subcommand(1);
    struct {
        Common c;
        std::string a, b;
    } p;

    auto parse_poly = [](const Common& c, const std::string& text) {
        rp::Vector coeffs = rp::parse_vector(c.tag(), text);
        if (coeffs.size() == 0) throw rp::ParseError("polynomial needs at least one coefficient");
        return rp::Poly(coeffs.size() - 1, coeffs);
    };

    auto* prev = poly->add_subcommand("reverse", "reverse the coefficient vector");
    add_common(prev, p.c);
    prev->add_option("coeffs", p.a)->required();
    prev->callback([&] { emit_poly(p.c, rp::reverse_poly(parse_poly(p.c, p.a))); });

    auto* ppaste = poly->add_subcommand("paste", "paste two polynomials");
    add_common(ppaste, p.c);
    ppaste->add_option("left", p.a)->required();
    ppaste->add_option("right", p.b)->required();
    ppaste->callback(
        [&] { emit_poly(p.c, rp::paste_poly(parse_poly(p.c, p.a), parse_poly(p.c, p.b))); });

    auto* pdec = poly->add_subcommand("decompose", "palindromic + antipalindromic parts");
    add_common(pdec, p.c);
    pdec->add_option("coeffs", p.a)->required();
    pdec->callback([&] {
        auto [pal, anti] = rp::decompose_poly(parse_poly(p.c, p.a));
        if (p.c.as_json)
            std::cout << json{{"pal", rp::to_json(pal)}, {"anti", rp::to_json(anti)}}.dump()
                      << "\n";
        else
            std::cout << "pal: " << pal.to_string() << "\nanti: " << anti.to_string() << "\n";
    });

    // ---- mat ---------------------------------------------------------------
    auto* mat = app.add_subcommand("mat", "matrix operations");
    mat->require_subcommand(1);
    struct {
        Common c;
        std::string a, b, file, mode;
        std::size_t n = 0, m = 0;
    } M;

    auto add_matrix_arg = [&](CLI::App* cmd, std::string& target, const char* name) {
        cmd->add_option(name, target, "inline rows 'a,b;c,d' (or use --file)");
        cmd->add_option("--file", M.file, "JSON matrix file");
    };

    auto* mrev = mat->add_subcommand("reverse", "reverse rows, columns or both");
    add_common(mrev, M.c);
    mrev->add_option("--mode", M.mode, "rows | cols | full")->required();
    add_matrix_arg(mrev, M.a, "matrix");
    mrev->callback([&] {
        rp::Matrix A = load_matrix(M.c, M.a, M.file);
        if (M.mode == "rows")
            emit_matrix(M.c, rp::reverse_rows(A));
        else if (M.mode == "cols")
            emit_matrix(M.c, rp::reverse_cols(A));
        else if (M.mode == "full")
            emit_matrix(M.c, rp::reverse_full(A));
        else
            throw rp::ParseError("mode must be rows, cols or full");
    });

    auto* mpaste = mat->add_subcommand("paste", "paste two matrices");
    add_common(mpaste, M.c);
    mpaste->add_option("--mode", M.mode, "rows | cols | blocks")->required();
    mpaste->add_option("left", M.a)->required();
    mpaste->add_option("right", M.b)->required();
    mpaste->callback([&] {
        rp::Matrix A = rp::parse_matrix(M.c.tag(), M.a);
        rp::Matrix B = rp::parse_matrix(M.c.tag(), M.b);
        if (M.mode == "rows")
            emit_matrix(M.c, rp::paste_rows(A, B));
        else if (M.mode == "cols")
            emit_matrix(M.c, rp::paste_cols(A, B));
        else if (M.mode == "blocks")
            emit_matrix(M.c, rp::paste_blocks(A, B));
        else
            throw rp::ParseError("mode must be rows, cols or blocks");
    });

    auto* mdec = mat->add_subcommand("decompose", "symmetry decomposition");
    add_common(mdec, M.c);
    mdec->add_option("--mode", M.mode, "rc | full")->required();
    add_matrix_arg(mdec, M.a, "matrix");
    mdec->callback([&] {
        rp::Matrix A = load_matrix(M.c, M.a, M.file);
        if (M.mode == "rc") {
            rp::QuadDecomposition q = rp::decompose_rc(A);
            if (M.c.as_json)
                std::cout << json{{"pp", rp::to_json(q.pp)},
                                  {"pa", rp::to_json(q.pa)},
                                  {"ap", rp::to_json(q.ap)},
                                  {"aa", rp::to_json(q.aa)}}
                                 .dump()
                          << "\n";
            else
                std::cout << "pp: " << q.pp.to_string() << "\npa: " << q.pa.to_string()
                          << "\nap: " << q.ap.to_string() << "\naa: " << q.aa.to_string() << "\n";
        } else if (M.mode == "full") {
            auto [pal, anti] = rp::decompose_full(A);
            if (M.c.as_json)
                std::cout << json{{"pal", rp::to_json(pal)}, {"anti", rp::to_json(anti)}}.dump()
                          << "\n";
            else
                std::cout << "pal: " << pal.to_string() << "\nanti: " << anti.to_string() << "\n";
        } else {
            throw rp::ParseError("mode must be rc or full");
        }
    });

    auto* mdet = mat->add_subcommand("det", "determinant");
    add_common(mdet, M.c);
    add_matrix_arg(mdet, M.a, "matrix");
    mdet->callback([&] {
        rp::Scalar d = rp::det(load_matrix(M.c, M.a, M.file));
        std::cout << (M.c.as_json ? json(d.to_string()).dump() : d.to_string()) << "\n";
    });

    auto* minv = mat->add_subcommand("inv", "inverse");
    add_common(minv, M.c);
    add_matrix_arg(minv, M.a, "matrix");
    minv->callback([&] { emit_matrix(M.c, rp::inverse(load_matrix(M.c, M.a, M.file))); });

    auto* mtrace = mat->add_subcommand("trace", "trace");
    add_common(mtrace, M.c);
    add_matrix_arg(mtrace, M.a, "matrix");
    mtrace->callback([&] {
        rp::Scalar t = rp::trace(load_matrix(M.c, M.a, M.file));
        std::cout << (M.c.as_json ? json(t.to_string()).dump() : t.to_string()) << "\n";
    });

    auto* mbasis = mat->add_subcommand("basis", "symmetry subspace basis");
    add_common(mbasis, M.c);
    mbasis->add_option("--mode", M.mode,
                       "row-pal row-anti col-pal col-anti pp pa ap aa full-pal full-anti")
        ->required();
    mbasis->add_option("--n", M.n, "rows")->required();
    mbasis->add_option("--m", M.m, "columns")->required();
    mbasis->callback([&] {
        auto basis = rp::symmetry_basis(M.n, M.m, rp::parse_symmetry_mode(M.mode), M.c.tag());
        if (M.c.as_json) {
            json arr = json::array();
            for (const auto& b : basis) arr.push_back(rp::to_json(b));
            std::cout << arr.dump() << "\n";
        } else {
            for (const auto& b : basis) std::cout << b.to_string() << "\n";
        }
    });

    // ---- crossn ------------------------------------------------------------
    auto* crossn = app.add_subcommand("crossn", "generalized (n-1)-ary vector product in K^n");
    struct {
        Common c;
        std::string a, file;
    } X;
    add_common(crossn, X.c);
    crossn->add_option("rows", X.a, "the n-1 input vectors as matrix rows");
    crossn->add_option("--file", X.file, "JSON matrix file");
    crossn->callback([&] {
        rp::Matrix Mx = load_matrix(X.c, X.a, X.file);
        std::vector<rp::Vector> rows;
        for (std::size_t i = 0; i < Mx.rows(); ++i) rows.push_back(Mx.row(i));
        emit_vector(X.c, rp::generalized_cross(rows));
    });

    // ---- transform ---------------------------------------------------------
    auto* tr = app.add_subcommand("transform", "the reversing linear transformation");
    tr->require_subcommand(1);
    struct {
        Common c;
        std::size_t n = 0;
        int sign = 1;
    } T;

    auto* tex = tr->add_subcommand("exchange", "anti-diagonal exchange matrix");
    add_common(tex, T.c);
    tex->add_option("--n", T.n)->required();
    tex->callback([&] { emit_matrix(T.c, rp::exchange_matrix(T.n, T.c.tag())); });

    auto* tchar = tr->add_subcommand("charpoly", "characteristic polynomial");
    add_common(tchar, T.c);
    tchar->add_option("--n", T.n)->required();
    tchar->callback([&] { emit_poly(T.c, rp::reversing_char_poly(T.n, T.c.tag())); });

    auto* tmin = tr->add_subcommand("minpoly", "minimal polynomial");
    add_common(tmin, T.c);
    tmin->add_option("--n", T.n)->required();
    tmin->callback([&] { emit_poly(T.c, rp::reversing_min_poly(T.n, T.c.tag())); });

    auto* teig = tr->add_subcommand("eigenbasis", "eigenspace basis for eigenvalue +1 or -1");
    add_common(teig, T.c);
    teig->add_option("--n", T.n)->required();
    teig->add_option("--sign", T.sign, "+1 or -1");
    teig->callback([&] {
        for (const auto& b : rp::eigenspace_basis(T.n, T.sign, T.c.tag()))
            std::cout << b.to_string() << "\n";
    });

    // ---- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "brute-force law verifier");
    struct {
        Common c;
        std::string law;
        bool suite = false;
        std::size_t n = 0, m = 0;
        std::uint64_t trials = 0, seed = 0, budget = 10'000'000;
    } V;
    V.c.field = "gf:3";
    add_common(verify, V.c);
    verify->add_option("--law", V.law, "law id or alias");
    verify->add_flag("--suite", V.suite, "run the full catalog");
    verify->add_option("--n", V.n);
    verify->add_option("--m", V.m);
    verify->add_option("--trials", V.trials, "forces the random strategy");
    verify->add_option("--seed", V.seed);
    verify->add_option("--budget", V.budget);
    int verify_exit = 0;
    verify->callback([&] {
        if (V.law.empty() == !V.suite)
            throw rp::ParseError("choose exactly one of --law or --suite");
        rp::DomainSpec d;
        d.field = V.c.tag();
        d.n = V.n;
        d.m = V.m;
        d.seed = V.seed;
        d.budget = V.budget;
        if (V.trials > 0 || d.field.kind() == rp::FieldKind::Rational) {
            d.strategy = rp::DomainSpec::Strategy::Random;
            d.trials = V.trials > 0 ? V.trials : 200;
        }
        if (V.suite) {
            auto reports = rp::run_suite(d);
            if (V.c.as_json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(rp::report_to_json(r));
                std::cout << arr.dump() << "\n";
            } else {
                std::cout << rp::summary_table(reports);
            }
            verify_exit = rp::suite_ok(reports) ? 0 : 1;
        } else {
            rp::LawReport r = rp::check_law(V.law, d);
            std::cout << rp::report_to_json(r).dump() << "\n";
            const bool refuted = rp::find_law(V.law).cls == rp::LawClass::Refuted;
            const bool as_expected = r.status == rp::LawStatus::Skipped ||
                                     (refuted ? r.status == rp::LawStatus::Fail
                                              : r.status == rp::LawStatus::Pass);
            verify_exit = as_expected ? 0 : 1;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 2;
    } catch (const rp::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return verify_exit;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
