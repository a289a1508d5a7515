// hassett: exact arithmetic for discriminant conditions on special cubic
// fourfolds. Subcommands: check, enumerate, family, normalize, pell, disc.
// Exit codes: 0 evaluated, 1 verification/admissibility failure,
// 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hassett/diophantine.hpp"
#include "hassett/families.hpp"
#include "hassett/normal_form.hpp"
#include "hassett/render.hpp"

namespace {

constexpr const char* kVersion = "hassett 0.1.0 (report schema 1.0.0)";
constexpr long long kDefaultEnumerateCeiling = 1'000'000;

struct OutputFlags {
    bool json = false;
    bool csv = false;
    bool quiet = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags, bool row_shaped) {
    auto* json = cmd->add_flag("--json", flags.json, "machine-readable JSON output");
    auto* quiet = cmd->add_flag("--quiet", flags.quiet, "suppress stdout");
    (void)quiet;
    if (row_shaped) {
        cmd->add_flag("--csv", flags.csv, "CSV rows")->excludes(json);
    }
}

void emit(const OutputFlags& flags, const std::string& s) {
    if (!flags.quiet) std::cout << s;
}

void emit_line(const OutputFlags& flags, const std::string& s) {
    if (!flags.quiet) std::cout << s << "\n";
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

hassett::Int parse_int(const std::string& text, const char* what) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
        }
    }
    return hassett::Int(text);
}

hassett::Int enumerate_ceiling() {
    const char* env = std::getenv("HASSETT_ENUMERATE_CEILING");
    if (env == nullptr) return kDefaultEnumerateCeiling;
    return parse_int(env, "HASSETT_ENUMERATE_CEILING");
}

int run_check(const std::string& d_text, const OutputFlags& flags) {
    const hassett::Int d = parse_int(d_text, "check: d");
    if (d < 1) throw UsageError("check: d must be >= 1");
    const hassett::ConditionReport report = hassett::check_conditions(d);
    if (flags.json) {
        emit_line(flags, hassett::json_check_report(report));
    } else {
        emit(flags, hassett::text_check_report(report));
    }
    return 0;
}

struct EnumerateFilter {
    bool star = false;
    bool double_star = false;
    bool triple_star = false;
};

EnumerateFilter parse_filter(const std::string& spec) {
    EnumerateFilter out;
    std::string token;
    std::istringstream stream(spec);
    while (std::getline(stream, token, ',')) {
        if (token == "star") out.star = true;
        else if (token == "double_star") out.double_star = true;
        else if (token == "triple_star") out.triple_star = true;
        else if (!token.empty()) throw UsageError("enumerate: unknown filter '" + token + "'");
    }
    return out;
}

int run_enumerate(const std::string& max_text, const std::string& filter_text,
                  const OutputFlags& flags) {
    const hassett::Int max_d = parse_int(max_text, "enumerate: --max");
    const hassett::Int ceiling = enumerate_ceiling();
    if (max_d < 7 || max_d > ceiling) {
        throw UsageError("enumerate: --max must satisfy 7 <= max <= " + ceiling.str());
    }
    const EnumerateFilter filter = parse_filter(filter_text);

    hassett::JsonWriter::Array json_rows;
    if (flags.csv) emit_line(flags, hassett::csv_report_header());
    for (hassett::Int d = 7; d <= max_d; ++d) {
        if (filter.star && !hassett::condition_star(d)) continue;
        if (filter.double_star && !hassett::condition_double_star(d)) continue;
        if (filter.triple_star && !hassett::condition_triple_star(d).solvable) continue;
        const hassett::ConditionReport report = hassett::check_conditions(d);
        if (flags.json) {
            json_rows.push(hassett::json_check_report(report));
        } else if (flags.csv) {
            emit_line(flags, hassett::csv_report_row(report));
        } else {
            emit_line(flags, hassett::text_enumerate_row(report));
        }
    }
    if (flags.json) emit_line(flags, json_rows.str());
    return 0;
}

int run_family_list(const OutputFlags& flags) {
    emit(flags, flags.json ? hassett::json_family_list() + "\n" : hassett::text_family_list());
    return 0;
}

int run_family_verify(const std::string& id_text, bool symbolic, const std::string& kmin_text,
                      const std::string& kmax_text, bool use_printed, const OutputFlags& flags) {
    const auto id = hassett::parse_family_id(id_text);
    if (!id) throw UsageError("family: unknown id '" + id_text + "'");
    const hassett::FamilySpec& spec = hassett::family(*id);
    if (symbolic) {
        if (flags.csv) throw UsageError("family: --csv requires numeric (row-shaped) mode");
        const auto v = hassett::verify_family_symbolic(spec, use_printed);
        emit(flags, flags.json ? hassett::json_family_symbolic(spec, v, use_printed) + "\n"
                               : hassett::text_family_symbolic(spec, v, use_printed));
        return v.ok ? 0 : 1;
    }
    const hassett::Int k_min = parse_int(kmin_text, "family: --k-min");
    const hassett::Int k_max = parse_int(kmax_text, "family: --k-max");
    if (k_min > k_max) throw UsageError("family: --k-min must be <= --k-max");
    const auto rows = hassett::verify_family_numeric(spec, k_min, k_max, use_printed);
    bool all_ok = true;
    for (const auto& row : rows) all_ok = all_ok && row.ok;
    if (flags.json) {
        emit_line(flags, hassett::json_family_numeric(spec, rows, k_min, k_max, use_printed));
    } else if (flags.csv) {
        emit_line(flags, hassett::csv_family_header());
        for (const auto& row : rows) emit_line(flags, hassett::csv_family_row(row));
    } else {
        emit(flags, hassett::text_family_numeric(spec, rows));
    }
    return all_ok ? 0 : 1;
}

int run_normalize(const std::string& geometry_text, const std::string& m_text,
                  const std::string& c_text, const std::string& s_text, const OutputFlags& flags) {
    hassett::Geometry geometry;
    try {
        geometry = hassett::parse_geometry(geometry_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("normalize: ") + e.what());
    }
    const hassett::MarkedClassData data{geometry, parse_int(m_text, "normalize: --m"),
                                        parse_int(c_text, "normalize: --c"),
                                        parse_int(s_text, "normalize: --s")};
    const hassett::CanonicalForm form = hassett::normalize(data);
    emit(flags, flags.json ? hassett::json_canonical_form(form) + "\n"
                           : hassett::text_canonical_form(form));
    return 0;
}

int run_pell(const std::string& d_text, const std::string& n_text, const OutputFlags& flags) {
    const hassett::Int D = parse_int(d_text, "pell: --d");
    if (D < 2) throw UsageError("pell: --d must be >= 2");
    const hassett::Int N = parse_int(n_text, "pell: --n");
    hassett::PellOutcome outcome;
    try {
        outcome = hassett::pell_solve_detail(D, N);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("pell: ") + e.what());
    }
    emit(flags, flags.json ? hassett::json_pell(D, N, outcome) + "\n"
                           : hassett::text_pell(D, N, outcome));
    return 0;
}

int run_disc(const std::string& gram_text, const OutputFlags& flags) {
    hassett::GramMatrix g = [&] {
        try {
            return hassett::parse_gram(gram_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("disc: ") + e.what());
        }
    }();
    const hassett::Int disc = hassett::discriminant(g);
    emit_line(flags, flags.json ? hassett::json_disc(g, disc) : disc.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Diophantine and lattice arithmetic for special cubic fourfold discriminants"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    OutputFlags flags;

    auto* check = app.add_subcommand("check", "evaluate conditions (*), (**), (***) for one d");
    std::string check_d;
    check->add_option("d", check_d, "discriminant to test (d >= 1)")->required();
    add_output_flags(check, flags, false);

    auto* enumerate = app.add_subcommand("enumerate", "list d in [7, max] passing the selected conditions");
    std::string enum_max, enum_filter;
    enumerate->add_option("--max", enum_max, "upper bound for d (>= 7)")->required();
    enumerate->add_option("--filter", enum_filter,
                          "comma-separated subset of star,double_star,triple_star");
    add_output_flags(enumerate, flags, true);

    auto* family = app.add_subcommand("family", "witness families for the parametric discriminants");
    family->require_subcommand(1);
    auto* family_list = family->add_subcommand("list", "show the eight families");
    add_output_flags(family_list, flags, false);
    auto* family_verify = family->add_subcommand("verify", "verify one family's identity");
    std::string family_id, family_kmin = "-10", family_kmax = "10";
    bool family_symbolic = false, family_printed = false;
    family_verify->add_option("id", family_id, "family id (PlaneI, PlaneII, A..F)")->required();
    family_verify->add_flag("--symbolic", family_symbolic, "verify as a polynomial identity in k");
    family_verify->add_option("--k-min", family_kmin, "numeric mode: first k (default -10)");
    family_verify->add_option("--k-max", family_kmax, "numeric mode: last k (default 10)");
    family_verify->add_flag("--use-printed-form", family_printed,
                            "use the printed d(x,y) coefficients instead of the derived ones");
    add_output_flags(family_verify, flags, true);

    auto* normalize = app.add_subcommand("normalize", "canonicalize marked rank-3 class data");
    std::string norm_geometry, norm_m, norm_c = "1", norm_s;
    normalize->add_option("--geometry", norm_geometry, "plane or dp6")->required();
    normalize->add_option("--m", norm_m, "H2 . Sigma")->required();
    normalize->add_option("--c", norm_c, "Q . Sigma or S . Sigma (default 1)");
    normalize->add_option("--s", norm_s, "Sigma^2")->required();
    add_output_flags(normalize, flags, false);

    auto* pell = app.add_subcommand("pell", "solve x^2 - D y^2 = N");
    std::string pell_d, pell_n = "-3";
    pell->add_option("--d", pell_d, "coefficient D (>= 2)")->required();
    pell->add_option("--n", pell_n, "right-hand side N (default -3; |N| < sqrt(D) unless D is square)");
    add_output_flags(pell, flags, false);

    auto* disc = app.add_subcommand("disc", "discriminant of a Gram matrix given as rows 'a,b;b,c'");
    std::string disc_gram;
    disc->add_option("gram", disc_gram, "row-separated symmetric integer matrix")->required();
    add_output_flags(disc, flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(check_d, flags);
        if (enumerate->parsed()) return run_enumerate(enum_max, enum_filter, flags);
        if (family_list->parsed()) return run_family_list(flags);
        if (family_verify->parsed()) {
            return run_family_verify(family_id, family_symbolic, family_kmin, family_kmax,
                                     family_printed, flags);
        }
        if (normalize->parsed()) {
            return run_normalize(norm_geometry, norm_m, norm_c, norm_s, flags);
        }
        if (pell->parsed()) return run_pell(pell_d, pell_n, flags);
        if (disc->parsed()) return run_disc(disc_gram, flags);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const hassett::AdmissibilityViolation& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const hassett::NormalizationFailure& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hassett::InvalidPairing& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
