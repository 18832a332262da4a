#include "gsp4/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gsp4/constants.hpp"
#include "gsp4/io.hpp"
#include "gsp4/lattice.hpp"
#include "gsp4/modforms.hpp"
#include "gsp4/parallel.hpp"
#include "gsp4/suites.hpp"

namespace gsp4 {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Status { None, Pass, Fail };

struct Entry {
    std::string group;
    std::string name;
    Json value;
    std::string text;
    std::string approx;
    Status status = Status::None;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<Entry> entries;

    void add(std::string name, Json value, std::string text, std::string approx = "") {
        entries.push_back({"", std::move(name), std::move(value), std::move(text), std::move(approx), Status::None, ""});
    }
    void verdict(std::string name, bool pass, Json value = nullptr, std::string text = "", std::string group = "",
                 std::string detail = "") {
        entries.push_back({std::move(group), std::move(name), std::move(value), std::move(text), "",
                           pass ? Status::Pass : Status::Fail, std::move(detail)});
    }
    bool ok() const {
        for (const auto& e : entries)
            if (e.status == Status::Fail) return false;
        return true;
    }
    bool has_status() const {
        for (const auto& e : entries)
            if (e.status != Status::None) return true;
        return false;
    }
};

const char* status_word(Status s) { return s == Status::Pass ? "PASS" : s == Status::Fail ? "FAIL" : ""; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_json(const Report& r) {
    Json j;
    j["command"] = r.title;
    Json results = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        if (!e.group.empty()) x["suite"] = e.group;
        x["name"] = e.name;
        x["value"] = e.value;
        if (!e.approx.empty()) x["approx"] = e.approx;
        if (e.status != Status::None) x["status"] = status_word(e.status);
        if (!e.detail.empty()) x["detail"] = e.detail;
        results.push_back(x);
    }
    j["results"] = results;
    if (r.has_status()) j["status"] = r.ok() ? "PASS" : "FAIL";
    return j.dump(2) + "\n";
}

std::string render_markdown(const Report& r) {
    std::ostringstream os;
    os << "# " << r.title << "\n\n";
    std::string group;
    for (const auto& e : r.entries) {
        if (e.group != group) {
            group = e.group;
            os << "\n## " << group << "\n\n";
        }
        os << "- " << e.name << ": ";
        if (e.status != Status::None) {
            os << status_word(e.status);
            if (!e.text.empty()) os << " (" << e.text << ")";
            if (!e.detail.empty()) os << " [" << e.detail << "]";
        } else {
            os << e.text;
            if (!e.approx.empty()) os << " (approx " << e.approx << ")";
        }
        os << "\n";
    }
    if (r.has_status()) os << "\nstatus: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    os << "group,name,value,approx,status\n";
    for (const auto& e : r.entries)
        os << csv_field(e.group) << "," << csv_field(e.name) << "," << csv_field(e.text) << "," << csv_field(e.approx) << ","
           << status_word(e.status) << "\n";
    return os.str();
}

std::string render(const Report& r, const std::string& format) {
    if (format == "json") return render_json(r);
    if (format == "csv") return render_csv(r);
    return render_markdown(r);
}

std::string maybe_approx(bool approx, const BigRational& q) { return approx ? to_decimal(q, 20) : ""; }
std::string maybe_approx(bool approx, const PiQuantity& x) { return approx ? x.to_decimal(20) : ""; }

std::string poly_string(const std::vector<BigInt>& desc, const std::string& var) {
    std::string out;
    std::size_t deg = desc.size() - 1;
    for (std::size_t k = 0; k < desc.size(); ++k) {
        const BigInt& c = desc[k];
        if (c == 0) continue;
        std::size_t e = deg - k;
        std::string mono = e == 0 ? "" : e == 1 ? var : var + "^" + std::to_string(e);
        std::string coef = c == 1 && e > 0 ? "" : c.get_str() + (e > 0 ? "*" : "");
        if (!out.empty()) out += " + ";
        out += coef + mono;
    }
    return out.empty() ? "0" : out;
}

std::string matrix_text(const RationalMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r ? "; [" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
        out += "]";
    }
    return out;
}

// p^v * r with r = 1 or the least non-residue (odd p), r = unit part mod 8 (p = 2).
std::string square_class(const BigRational& x, unsigned long p) {
    long v = valuation_finite(x, p);
    BigRational unit = x;
    BigRational pq(static_cast<long>(p));
    for (long k = 0; k < std::labs(v); ++k) unit = v > 0 ? BigRational(unit / pq) : BigRational(unit * pq);
    std::string rep;
    BigInt num = unit.get_num(), den = unit.get_den();
    if (p == 2) {
        BigInt prod = num * den, r;
        mpz_fdiv_r_ui(r.get_mpz_t(), prod.get_mpz_t(), 8);
        rep = r.get_str();
    } else {
        if (similar_mod_unit_squares(unit, 1, p)) {
            rep = "1";
        } else {
            for (long n = 2;; ++n)
                if (!similar_mod_unit_squares(BigRational(n), 1, p)) {
                    rep = std::to_string(n);
                    break;
                }
        }
    }
    return std::to_string(p) + "^" + std::to_string(v) + "*" + rep;
}

std::size_t threads_from_env() {
    const char* env = std::getenv("TOOLKIT_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1 || n > 1024) throw UsageError("TOOLKIT_THREADS must be a positive integer, got '" + std::string(env) + "'");
    return static_cast<std::size_t>(n);
}

// ---------------------------------------------------------------------------

Report cmd_constants(long k, long kp, unsigned long level, bool approx) {
    if (kp < 0 || k < kp) throw UsageError("weights need k >= k' >= 0, got --k " + std::to_string(k) + " --kp " + std::to_string(kp));
    LevelFactor n;
    try {
        n = LevelFactor::of(level);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--level: ") + e.what());
    }
    Report r;
    r.title = "constants k=" + std::to_string(k) + " k'=" + std::to_string(kp) + " N=" + std::to_string(level);
    r.add("k", k, std::to_string(k));
    r.add("k'", kp, std::to_string(kp));
    r.add("N", level, std::to_string(level));
    BigRational cc = c_closed(k, kp);
    bool same = false;
    try {
        BigRational cp = cprime(k, kp);
        same = cp == cc;
        r.add("C'_{k,k'}", to_json(cp), to_string(cp), maybe_approx(approx, cp));
    } catch (const std::logic_error& e) {
        r.verdict("C'_{k,k'}", false, nullptr, "", "", e.what());
    }
    r.add("C_{k,k'}", to_json(cc), to_string(cc), maybe_approx(approx, cc));
    BigRational cn = c_level(n);
    r.add("C_N", to_json(cn), to_string(cn), maybe_approx(approx, cn));
    PiQuantity ich = ichino_constant(k, kp, n), pet = petersson_pairing_constant(k, kp, n);
    PiQuantity disc = main1_displayed(k, kp, n);
    r.add("Ichino constant", to_json(ich), ich.to_string(), maybe_approx(approx, ich));
    r.add("Petersson pairing constant", to_json(pet), pet.to_string(), maybe_approx(approx, pet));
    r.add("discriminant constant", to_json(disc), disc.to_string(), maybe_approx(approx, disc));
    r.verdict("C' = C", same);
    r.verdict("assembly identity", main1_assembly_check(k, kp, n));
    return r;
}

Report cmd_verify(const std::string& suite, std::size_t threads) {
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    Report r;
    r.title = "verify " + suite;
    std::size_t passed = 0, total = 0;
    for (const auto& s : run_suites(names, threads))
        for (const auto& c : s.checks) {
            Json v;
            v["passed"] = c.passed;
            v["total"] = c.total;
            r.verdict(c.name, c.ok(), v, std::to_string(c.passed) + "/" + std::to_string(c.total), s.suite, c.detail);
            ++total;
            if (c.ok()) ++passed;
        }
    Json v;
    v["passed"] = passed;
    v["total"] = total;
    r.verdict("checks passed", passed == total, v, std::to_string(passed) + "/" + std::to_string(total), "summary");
    return r;
}

Report cmd_lattice(const std::string& action, const std::string& path, long prime_override, bool approx) {
    LatticeInput in = lattice_from_json(read_json_file(path));
    if (prime_override > 0) {
        if (!is_prime(static_cast<unsigned long>(prime_override))) throw UsageError("--prime " + std::to_string(prime_override) + " is not prime");
        in.lattice.p = static_cast<unsigned long>(prime_override);
    }
    unsigned long p = in.lattice.p;
    Report r;
    r.title = "lattice " + action + " " + path;
    r.add("prime", p, std::to_string(p));
    r.add("dimension", in.lattice.dim(), std::to_string(in.lattice.dim()));
    bool integral = p_integral(gram_matrix(in.lattice, in.form), p);
    if (action == "disc") {
        if (!integral) throw InputError("basis", "pairings on the basis are not " + std::to_string(p) + "-integral; discriminant undefined");
        BigRational d = gram_discriminant(in.lattice, in.form);
        r.add("discriminant", to_json(d), to_string(d), maybe_approx(approx, d));
        if (d == 0) {
            r.add("valuation", nullptr, "infinite");
            return r;
        }
        long v = valuation_finite(d, p);
        r.add("valuation", v, std::to_string(v));
        std::string sc = square_class(d, p);
        r.add("square class", sc, sc);
        BigInt idx = dual_index(in.lattice, in.form);
        r.add("dual index", to_json(idx), to_string(idx));
        r.verdict("dual index = p-part of discriminant", idx == [&] {
            BigInt pp;
            mpz_ui_pow_ui(pp.get_mpz_t(), p, static_cast<unsigned long>(v));
            return pp;
        }());
    } else if (action == "dual") {
        LatticeZp d = dual_lattice(in.lattice, in.form);
        r.add("dual basis", to_json(d.basis), matrix_text(d.basis));
        r.add("L inside L*", integral, integral ? "yes" : "no");
        if (integral) {
            BigInt idx = dual_index(in.lattice, in.form);
            r.add("dual index", to_json(idx), to_string(idx));
        }
        r.verdict("double dual equals L", same_lattice(dual_lattice(d, in.form), in.lattice));
    } else {
        if (!in.splitter) throw InputError("splitter", "missing (needed for duality-check)");
        bool ok = split_project_duality_check(in.lattice, in.form, *in.splitter);
        r.verdict("L is self-dual", true);
        r.verdict("projection to W1 equals dual of L in W1", ok);
    }
    return r;
}

Report cmd_congruence(const std::string& fa, const std::string& fb, long bound) {
    if (bound < 1) throw UsageError("empty comparison range (--bound must be at least 1)");
    EigenSystem a = eigen_system_from_json(read_json_file(fa));
    EigenSystem b = eigen_system_from_json(read_json_file(fb));
    CongruenceScan s = congruence_prime_scan(a, b, bound);
    Report r;
    r.title = "congruence " + fa + " " + fb + " bound=" + std::to_string(bound);
    r.add("operators compared", s.labels_compared, std::to_string(s.labels_compared));
    if (s.identical) {
        r.add("result", "identical systems", "identical systems");
        return r;
    }
    r.add("index", to_json(s.index), to_string(s.index));
    Json primes = Json::array();
    std::string list;
    for (const auto& c : s.primes) {
        primes.push_back(to_json(c.prime));
        list += (list.empty() ? "" : ", ") + c.prime.get_str();
    }
    r.add("congruence primes", primes, "[" + list + "]");
    for (const auto& c : s.primes) {
        Json w;
        w["prime"] = to_json(c.prime);
        Json fa_j = Json::array(), fb_j = Json::array();
        for (const auto& x : c.factor_a) fa_j.push_back(to_json(x));
        for (const auto& x : c.factor_b) fb_j.push_back(to_json(x));
        w["factor_a"] = fa_j;
        w["factor_b"] = fb_j;
        w["residue_dimension"] = c.residue_dimension;
        r.add("witness above " + c.prime.get_str(), w,
              "(" + c.prime.get_str() + ", " + poly_string(c.factor_a, "x") + ", " + poly_string(c.factor_b, "y") + ")");
    }
    return r;
}

std::string cmd_eigensystem(long k, long bound, bool eisenstein) {
    if (bound < 1) throw UsageError("--bound must be at least 1");
    HeckeEigenSystem sys;
    try {
        sys = eisenstein ? eisenstein_eigensystem(k, bound) : cusp_eigensystem(k, bound);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return to_json(sys.as_eigen_system()).dump(2) + "\n";
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError(out_path, "cannot open for writing");
    f << text;
    if (!f) throw InputError(out_path, "write failed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for GSp(4) K-types, adjoint L-value constants, lattices and congruences", "gsp4tool"};
    app.require_subcommand(1);

    std::string format = "markdown", out_path;
    bool approx = false;
    long k = 0, kp = 0, bound = 0, prime = 0;
    unsigned long level = 1;
    std::string suite, action, input;
    std::vector<std::string> files;
    bool eisenstein = false;

    auto common = [&](CLI::App* sc) {
        sc->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "markdown", "csv"}));
        sc->add_flag("--approx", approx, "Append decimal approximations");
        sc->add_option("--out", out_path, "Write the report to this file");
    };

    CLI::App* constants = app.add_subcommand("constants", "Exact constants for weight (k, k') and level N");
    constants->add_option("--k", k, "Weight k")->required();
    constants->add_option("--kp", kp, "Weight k' (default 0)");
    constants->add_option("--level", level, "Square-free level N (default 1)");
    common(constants);

    CLI::App* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", suite, "lie, ktypes, constants, lattice, modforms or all")
        ->required()
        ->check(CLI::IsMember({"lie", "ktypes", "constants", "lattice", "modforms", "all"}));
    common(verify);

    CLI::App* lattice = app.add_subcommand("lattice", "Discriminant, dual or duality check of a lattice file");
    lattice->add_option("action", action, "disc, dual or duality-check")
        ->required()
        ->check(CLI::IsMember({"disc", "dual", "duality-check"}));
    lattice->add_option("input", input, "Lattice JSON file")->required();
    lattice->add_option("--prime", prime, "Override the prime in the file");
    common(lattice);

    CLI::App* congruence = app.add_subcommand("congruence", "Congruence primes between two eigen systems");
    congruence->add_option("files", files, "Two eigen system JSON files")->required()->expected(2);
    congruence->add_option("--bound", bound, "Compare T_n for n <= bound")->required();
    common(congruence);

    CLI::App* eigensystem = app.add_subcommand("eigensystem", "Write a level-1 Hecke eigen system as JSON");
    eigensystem->add_option("--k", k, "Weight")->required();
    eigensystem->add_option("--bound", bound, "Largest n")->required();
    eigensystem->add_flag("--eisenstein", eisenstein, "Eisenstein series E_k instead of the cusp form");
    eigensystem->add_option("--out", out_path, "Write the JSON to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        CLI::App* active = &app;
        for (CLI::App* sc : app.get_subcommands()) active = sc;
        err << active->help();
        return kExitUsage;
    }

    try {
        std::size_t threads = threads_from_env();
        set_default_threads(threads);
        Report report;
        if (*constants) {
            report = cmd_constants(k, kp, level, approx);
        } else if (*verify) {
            report = cmd_verify(suite, threads);
        } else if (*lattice) {
            report = cmd_lattice(action, input, prime, approx);
        } else if (*congruence) {
            report = cmd_congruence(files[0], files[1], bound);
        } else {
            emit(cmd_eigensystem(k, bound, eisenstein), out_path, out);
            return kExitOk;
        }
        emit(render(report, format), out_path, out);
        return report.ok() ? kExitOk : kExitCheckFailed;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace gsp4
