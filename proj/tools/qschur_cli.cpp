#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qschur/appendix.hpp"
#include "qschur/json_io.hpp"
#include "qschur/repn.hpp"
#include "qschur/transfer.hpp"
#include "qschur/verify.hpp"

using namespace qschur;

namespace {

json residue_to_json(const Residue& x) {
    json a = json::array();
    for (int v : x.r) a.push_back(v);
    return a;
}

void emit(const json& j, const std::string& format, const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        os = &file;
    }
    if (format == "json") {
        *os << j.dump(2) << "\n";
    } else if (format == "text") {
        *os << j.dump(2) << "\n";
    } else {
        throw domain_error("unsupported format for this command: " + format);
    }
}

int table_cache_sync(int n, int r) {
    const char* dir = std::getenv("QSCHUR_CACHE_DIR");
    if (!dir) return 0;
    auto T = SchurTable::get(n, r);
    std::string path = std::string(dir) + "/qschur_table_n" + std::to_string(n) + "_r" +
                       std::to_string(r) + ".json";
    std::ifstream in(path);
    if (in.good()) {
        json j;
        in >> j;
        if (!schur_table_matches_json(*T, j)) {
            std::cerr << "cache mismatch for " << path << "\n";
            return 1;
        }
        return 0;
    }
    std::ofstream out(path);
    out << schur_table_to_json(*T).dump() << "\n";
    return 0;
}

struct Common {
    int n = 2, r = 3, lprime = 3;
    std::string field_kind = "cyclotomic";
    long long p = 0;
    std::string format = "json";
    std::string out_path;

    FieldSpec field() const {
        if (field_kind == "prime") return FieldSpec::prime_field(lprime, p);
        return FieldSpec::cyclotomic_field(lprime);
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_lprime = true) {
    cmd->add_option("--n", c.n, "number of rows/columns")->check(CLI::PositiveNumber);
    cmd->add_option("--r", c.r, "degree")->check(CLI::NonNegativeNumber);
    if (with_lprime)
        cmd->add_option("--lprime", c.lprime, "order of the root of unity (>= 3)")
            ->check(CLI::Range(3, 64));
    cmd->add_option("--field", c.field_kind, "cyclotomic | prime")
        ->check(CLI::IsMember({"cyclotomic", "prime"}));
    cmd->add_option("--p", c.p, "prime modulus (prime field; 0 picks the smallest)");
    cmd->add_option("--format", c.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", c.out_path, "write the report to a file");
}

}

int main(int argc, char** argv) {
    CLI::App app{"exact structure and representation data of q-Schur algebras at roots of unity"};
    app.require_subcommand(1);

    Common c;
    std::string suite = "all";
    std::string algebra = "little";
    std::string kind = "rho";
    std::vector<int> lambda_opt;
    int jobs = 1;

    CLI::App* dims = app.add_subcommand("dims", "dimensions of the three subalgebras");
    add_common(dims, c);

    CLI::App* simples_cmd = app.add_subcommand("simples", "simple-module index set");
    add_common(simples_cmd, c);

    CLI::App* blocks_cmd = app.add_subcommand("blocks", "little-algebra blocks for n = 2, l' odd");
    add_common(blocks_cmd, c);

    CLI::App* ss = app.add_subcommand("semisimple", "semisimplicity criterion");
    add_common(ss, c);

    CLI::App* analyze = app.add_subcommand("analyze", "radical, simples, Cartan, Ext^1, blocks");
    add_common(analyze, c);
    analyze->add_option("--algebra", algebra, "little | infinitesimal | schur")
        ->check(CLI::IsMember({"little", "infinitesimal", "schur"}));

    CLI::App* transfer = app.add_subcommand("transfer-check", "verify a transfer map");
    add_common(transfer, c);
    transfer->add_option("--kind", kind, "psi | rho")->check(CLI::IsMember({"psi", "rho"}));

    CLI::App* appendix_cmd = app.add_subcommand("appendix-klambda", "integral k_lambda certificates");
    add_common(appendix_cmd, c, false);
    appendix_cmd->add_option("--lambda", lambda_opt, "weight (defaults to all of Lambda(n,r))");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_common(verify_cmd, c);
    verify_cmd->add_option("--suite", suite,
                           "combinatorics | schur-core | little | representation | transfer | "
                           "appendix | all");
    verify_cmd->add_option("--jobs", jobs, "parallel independent cells")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (dims->parsed()) {
            FieldSpec f = c.field();
            auto rep = sandwich_check(c.n, c.r, f);
            json j;
            j["schema"] = "qschur/1";
            j["n"] = c.n;
            j["r"] = c.r;
            j["lprime"] = c.lprime;
            j["dim_u1"] = rep.dim_u1;
            j["dim_little"] = rep.dim_little;
            j["dim_infinitesimal"] = rep.dim_infinitesimal;
            j["dim_little_zero"] = enumerate_lambda_bar(c.n, c.r, c.lprime).size();
            if (c.format == "csv") {
                std::ostream* os = &std::cout;
                std::ofstream file;
                if (!c.out_path.empty()) { file.open(c.out_path); os = &file; }
                *os << "n,r,lprime,dim_u1,dim_little,dim_infinitesimal,dim_little_zero\n"
                    << c.n << "," << c.r << "," << c.lprime << "," << rep.dim_u1 << ","
                    << rep.dim_little << "," << rep.dim_infinitesimal << ","
                    << enumerate_lambda_bar(c.n, c.r, c.lprime).size() << "\n";
            } else {
                emit(j, c.format == "text" ? "text" : "json", c.out_path);
            }
            return table_cache_sync(c.n, c.r);
        }
        if (simples_cmd->parsed()) {
            FieldSpec f = c.field();
            json arr = json::array();
            for (const auto& x : simple_index_set(c.n, c.r, f.l(), c.lprime))
                arr.push_back(residue_to_json(x));
            json j;
            j["schema"] = "qschur/1";
            j["n"] = c.n;
            j["r"] = c.r;
            j["lprime"] = c.lprime;
            j["labels"] = arr;
            if (c.format == "csv") {
                std::ostream* os = &std::cout;
                std::ofstream file;
                if (!c.out_path.empty()) { file.open(c.out_path); os = &file; }
                *os << "label\n";
                for (const auto& x : simple_index_set(c.n, c.r, f.l(), c.lprime))
                    *os << x.str() << "\n";
            } else {
                emit(j, c.format == "text" ? "text" : "json", c.out_path);
            }
            return 0;
        }
        if (blocks_cmd->parsed()) {
            FieldSpec f = c.field();
            if (c.n != 2 || c.lprime % 2 == 0) {
                std::cerr << "blocks: the closed formula needs n = 2 and l' odd\n";
                return 2;
            }
            json arr = json::array();
            std::set<std::vector<json>> seen;
            for (const Weight& w : enumerate_lambda_plus(2, c.r)) {
                json blk = json::array();
                for (const auto& x : little_block_n2(w, c.r, f.l())) blk.push_back(residue_to_json(x));
                std::vector<json> key(blk.begin(), blk.end());
                if (seen.insert(key).second) arr.push_back(blk);
            }
            json j;
            j["schema"] = "qschur/1";
            j["n"] = c.n;
            j["r"] = c.r;
            j["lprime"] = c.lprime;
            j["blocks"] = arr;
            emit(j, c.format == "text" ? "text" : "json", c.out_path);
            return 0;
        }
        if (ss->parsed()) {
            FieldSpec f = c.field();
            bool val = semisimple_predicate(c.n, c.r, f.l());
            json j;
            j["schema"] = "qschur/1";
            j["n"] = c.n;
            j["r"] = c.r;
            j["lprime"] = c.lprime;
            j["semisimple"] = val;
            if (c.format == "text")
                std::cout << (val ? "true" : "false") << "\n";
            else
                emit(j, "json", c.out_path);
            return 0;
        }
        if (analyze->parsed()) {
            FieldSpec f = c.field();
            SubalgebraBasis B = algebra == "little"
                                    ? little_basis(c.n, c.r, f)
                                    : algebra == "infinitesimal"
                                          ? infinitesimal_basis(c.n, c.r, f)
                                          : full_schur_basis(c.n, c.r, f);
            FDAlgebra A = build_fd(B);
            AnalysisResult R = analyze_algebra(A);
            json j;
            j["schema"] = "qschur/1";
            j["algebra"] = algebra;
            j["n"] = c.n;
            j["r"] = c.r;
            j["lprime"] = c.lprime;
            j["dim"] = A.dim;
            j["rad_dim"] = static_cast<int>(R.rad.size());
            json sims = json::array();
            for (size_t i = 0; i < R.s.simples.size(); ++i) {
                json s;
                s["dim"] = R.s.simples[i].dim;
                s["label"] = residue_to_json(R.s.simples[i].label);
                s["block"] = R.block_of[i];
                sims.push_back(s);
            }
            j["simples"] = sims;
            json cartan = json::array();
            for (const auto& p : R.proj) {
                json row = json::array();
                for (int x : p.cartan) row.push_back(x);
                cartan.push_back(row);
            }
            j["cartan"] = cartan;
            json ext = json::array();
            for (const auto& row : R.ext1) {
                json jr = json::array();
                for (int x : row) jr.push_back(x);
                ext.push_back(jr);
            }
            j["ext1"] = ext;
            emit(j, c.format == "text" ? "text" : "json", c.out_path);
            return table_cache_sync(c.n, c.r);
        }
        if (transfer->parsed()) {
            FieldSpec f = c.field();
            json j;
            j["schema"] = "qschur/1";
            j["kind"] = kind;
            j["n"] = c.n;
            j["r"] = c.r;
            j["lprime"] = c.lprime;
            bool ok;
            if (kind == "psi") {
                PsiMap psi(c.n, c.r, f);
                j["generator_images"] = psi.verify_generator_images();
                j["homomorphism"] = psi.verify_homomorphism();
                j["little_restriction"] = psi.verify_little_restriction();
                ok = j["generator_images"].get<bool>() && j["homomorphism"].get<bool>() &&
                     j["little_restriction"].get<bool>();
            } else {
                RhoMap rho(c.n, c.r, f);
                j["generator_images"] = rho.verify_generator_images();
                j["p_images"] = rho.verify_p_images();
                j["homomorphism"] = rho.verify_homomorphism();
                j["surjective"] = rho.surjective();
                j["coordinate_dual"] = rho.verify_coordinate_dual();
                auto st = stabilization_check(c.n, c.r, f);
                j["dim_r"] = st.dim_r;
                j["dim_r_plus_lprime"] = st.dim_r_plus;
                j["rho_bijective"] = st.rho_bijective;
                j["bound_predicts_equality"] = st.bound_predicts_equality;
                ok = j["generator_images"].get<bool>() && j["p_images"].get<bool>() &&
                     j["homomorphism"].get<bool>() && j["surjective"].get<bool>() &&
                     j["coordinate_dual"].get<bool>();
            }
            emit(j, c.format == "text" ? "text" : "json", c.out_path);
            return ok ? 0 : 1;
        }
        if (appendix_cmd->parsed()) {
            CertStore cs(c.n, c.r);
            json j;
            j["schema"] = "qschur/1";
            j["n"] = c.n;
            j["r"] = c.r;
            json certs = json::array();
            bool ok = true;
            std::vector<Weight> targets;
            if (!lambda_opt.empty()) {
                targets.push_back(Weight(lambda_opt.begin(), lambda_opt.end()));
            } else {
                targets = cs.T->lambdas;
            }
            for (const Weight& lam : targets) {
                const auto& cert = cs.certify(lam);
                bool good = cs.eval(*cert.expr) == DiagElt::k_indicator(cs.T, lam);
                ok = ok && good;
                json e;
                json lw = json::array();
                for (int x : lam) lw.push_back(x);
                e["lambda"] = lw;
                e["expression"] = cs.render(*cert.expr);
                e["verified"] = good;
                certs.push_back(e);
                if (c.format == "text") {
                    std::cout << "k(";
                    for (size_t i = 0; i < lam.size(); ++i)
                        std::cout << (i ? "," : "") << lam[static_cast<size_t>(i)];
                    std::cout << ") = " << cs.render(*cert.expr)
                              << (good ? "  [verified]" : "  [FAILED]") << "\n";
                }
            }
            j["certificates"] = certs;
            j["verdict"] = ok ? "verified" : "failed";
            if (c.format != "text") emit(j, "json", c.out_path);
            return ok ? 0 : 1;
        }
        if (verify_cmd->parsed()) {
            Suite s = run_suite(suite, jobs);
            bool ok = all_pass(s);
            if (c.format == "json") {
                json arr = json::array();
                for (const auto& chk : s) {
                    json e;
                    e["name"] = chk.name;
                    e["pass"] = chk.pass;
                    e["details"] = chk.details;
                    arr.push_back(e);
                }
                json j;
                j["schema"] = "qschur/1";
                j["suite"] = suite;
                j["checks"] = arr;
                j["pass"] = ok;
                emit(j, "json", c.out_path);
            } else {
                std::ostream* os = &std::cout;
                std::ofstream file;
                if (!c.out_path.empty()) { file.open(c.out_path); os = &file; }
                for (const auto& chk : s)
                    *os << (chk.pass ? "[PASS] " : "[FAIL] ") << chk.name
                        << (chk.details.empty() ? "" : "  -- " + chk.details) << "\n";
                *os << (ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
