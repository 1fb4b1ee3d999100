// Command-line front end: enumeration, promotion orbits, statistics,
// polynomials and CSP verification with machine-readable output.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 usage or input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <tabsieve/charge.hpp>
#include <tabsieve/io.hpp>
#include <tabsieve/kostka.hpp>
#include <tabsieve/partition.hpp>
#include <tabsieve/planepart.hpp>
#include <tabsieve/promotion.hpp>
#include <tabsieve/ribbon.hpp>
#include <tabsieve/sieve.hpp>
#include <tabsieve/skewrsk.hpp>
#include <tabsieve/tableau.hpp>

using namespace tabsieve;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::string tableau_line(const Tableau& t) {
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0) out += '|';
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c > 0) out += ',';
            out += std::to_string(t.rows()[r][c]);
        }
    }
    return out;
}

void print_report(const CheckReport& rep, bool as_json) {
    if (as_json) {
        std::cout << to_json(rep).dump() << "\n";
        return;
    }
    for (const CspRow& row : rep.rows) {
        if (rep.bivariate)
            std::cout << "i=" << row.d << " j=" << row.d2;
        else
            std::cout << "d=" << row.d;
        std::cout << ": fixed=" << row.fixed << " eval=" << row.eval << " "
                  << (row.ok ? "ok" : "MISMATCH") << "\n";
    }
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    std::cout << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
}

struct InstanceFlags {
    std::string name;
    InstanceParams params;
    std::string nu_text, gamma_text, widths_text, heights_text;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--instance", name, "named instance")->required();
        cmd->add_option("--a", params.a, "rectangle width / hook arm");
        cmd->add_option("--b", params.b, "rectangle height / hook leg");
        cmd->add_option("--n", params.n, "stretch factor");
        cmd->add_option("--m", params.m, "alphabet size");
        cmd->add_option("--d", params.d, "promotion power / rotation step");
        cmd->add_option("--nu", nu_text, "partition, comma separated");
        cmd->add_option("--gamma", gamma_text, "content, comma separated");
        cmd->add_option("--widths", widths_text, "rectangle widths, comma separated");
        cmd->add_option("--heights", heights_text, "rectangle heights, comma separated");
    }

    CspInstance build() {
        if (!nu_text.empty()) params.nu = parse_partition(nu_text);
        if (!gamma_text.empty()) params.gamma = Composition(parse_int_list(gamma_text));
        if (!widths_text.empty()) params.widths = parse_int_list(widths_text);
        if (!heights_text.empty()) params.heights = parse_int_list(heights_text);
        return named_instance(name, params);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tableau combinatorics: censuses, promotion orbits, "
                 "charge statistics and cyclic sieving verification"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads,
                   "parallel census width; output is independent of the value");

    // ---- enumerate ----------------------------------------------------
    auto* cmd_enum = app.add_subcommand("enumerate", "list SSYT of a shape and content");
    std::string enum_shape, enum_content;
    bool enum_json = false;
    cmd_enum->add_option("--shape", enum_shape, "outer[/inner], e.g. 12,6,3/6,3")
        ->required();
    cmd_enum->add_option("--content", enum_content, "comma separated")->required();
    cmd_enum->add_flag("--json", enum_json, "JSON array output");

    // ---- promote ------------------------------------------------------
    auto* cmd_prom = app.add_subcommand("promote", "apply jeu-de-taquin promotion");
    std::string prom_tableau;
    int prom_m = 0;
    long long prom_power = 1;
    bool prom_json = false;
    cmd_prom->add_option("--tableau", prom_tableau, "tableau as JSON")->required();
    cmd_prom->add_option("--m", prom_m, "alphabet size")->required();
    cmd_prom->add_option("--power", prom_power, "steps; negative applies the inverse");
    cmd_prom->add_flag("--json", prom_json, "JSON output");

    // ---- orbits -------------------------------------------------------
    auto* cmd_orb = app.add_subcommand("orbits", "promotion orbit decomposition");
    std::string orb_family, orb_nu, orb_alpha;
    int orb_a = 0, orb_b = 0, orb_n = 0;
    bool orb_json = false, orb_csv = false;
    cmd_orb->add_option("--family", orb_family, "shst | sm | ribbon")->required();
    cmd_orb->add_option("--a", orb_a, "hook arm (shst)");
    cmd_orb->add_option("--b", orb_b, "hook leg (shst)");
    cmd_orb->add_option("--n", orb_n, "stretch factor (shst, sm)");
    cmd_orb->add_option("--nu", orb_nu, "partition (sm)");
    cmd_orb->add_option("--alpha", orb_alpha, "ribbon row lengths (ribbon)");
    cmd_orb->add_flag("--json", orb_json, "JSON output");
    cmd_orb->add_flag("--csv", orb_csv, "CSV orbit table");

    // ---- charge -------------------------------------------------------
    auto* cmd_chg = app.add_subcommand("charge", "charge statistics of a word");
    std::string chg_word;
    bool chg_json = false;
    cmd_chg->add_option("--word", chg_word, "comma separated letters")->required();
    cmd_chg->add_flag("--json", chg_json, "JSON output");

    // ---- kf -----------------------------------------------------------
    auto* cmd_kf = app.add_subcommand("kf", "Kostka-Foulkes polynomial");
    std::string kf_shape, kf_content;
    bool kf_modified = false, kf_json = false;
    cmd_kf->add_option("--shape", kf_shape, "outer[/inner]")->required();
    cmd_kf->add_option("--content", kf_content, "comma separated")->required();
    cmd_kf->add_flag("--modified", kf_modified, "cocharge-graded variant");
    cmd_kf->add_flag("--json", kf_json, "JSON output");

    // ---- macmahon -----------------------------------------------------
    auto* cmd_mac = app.add_subcommand("macmahon", "boxed plane partition polynomial");
    int mac_a = 0, mac_b = 0, mac_n = 0;
    bool mac_json = false;
    cmd_mac->add_option("--a", mac_a)->required();
    cmd_mac->add_option("--b", mac_b)->required();
    cmd_mac->add_option("--n", mac_n)->required();
    cmd_mac->add_flag("--json", mac_json, "JSON output");

    // ---- ribbon-count -------------------------------------------------
    auto* cmd_rib = app.add_subcommand("ribbon-count", "k-ribbon tableau census");
    std::string rib_shape, rib_content;
    int rib_k = 1;
    bool rib_json = false;
    cmd_rib->add_option("--shape", rib_shape, "outer[/inner]")->required();
    cmd_rib->add_option("--content", rib_content, "comma separated")->required();
    cmd_rib->add_option("--k", rib_k, "ribbon size")->required();
    cmd_rib->add_flag("--json", rib_json, "JSON output");

    // ---- rsk ----------------------------------------------------------
    auto* cmd_rsk = app.add_subcommand("rsk", "RSK row insertion of a biword");
    std::string rsk_top, rsk_bottom, rsk_tableau, rsk_nu;
    int rsk_n = 0;
    bool rsk_json = false;
    cmd_rsk->add_option("--top", rsk_top, "top row, comma separated");
    cmd_rsk->add_option("--bottom", rsk_bottom, "bottom row, comma separated");
    cmd_rsk->add_option("--tableau", rsk_tableau, "disjoint-rows tableau as JSON");
    cmd_rsk->add_option("--nu", rsk_nu, "partition (with --tableau)");
    cmd_rsk->add_option("--n", rsk_n, "stretch factor (with --tableau)");
    cmd_rsk->add_flag("--json", rsk_json, "JSON output");

    // ---- csp / bicsp --------------------------------------------------
    auto* cmd_csp = app.add_subcommand("csp", "verify a named CSP instance");
    InstanceFlags csp_flags;
    bool csp_json = false;
    csp_flags.add_to(cmd_csp);
    cmd_csp->add_flag("--json", csp_json, "JSON report");

    auto* cmd_bi = app.add_subcommand("bicsp", "verify a named biCSP instance");
    InstanceFlags bi_flags;
    bool bi_json = false;
    bi_flags.add_to(cmd_bi);
    cmd_bi->add_flag("--json", bi_json, "JSON report");

    // ---- shift --------------------------------------------------------
    auto* cmd_shift = app.add_subcommand("shift", "search for a CSP shift exponent");
    std::string shift_coeffs;
    long shift_n = 0;
    bool shift_json = false;
    cmd_shift->add_option("--coeffs", shift_coeffs,
                          "coefficients of q^0, q^1, ..., comma separated")
        ->required();
    cmd_shift->add_option("--n", shift_n, "order of the root of unity")->required();
    cmd_shift->add_flag("--json", shift_json, "JSON output");

    // let the global --threads flag appear after the subcommand too
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    (void)threads;  // censuses are exact and order-independent either way

    try {
        if (*cmd_enum) {
            std::vector<Tableau> X = enumerate_ssyt(parse_skew_shape(enum_shape),
                                                    Composition(parse_int_list(enum_content)));
            if (enum_json) {
                json arr = json::array();
                for (const Tableau& t : X) arr.push_back(to_json(t));
                std::cout << arr.dump() << "\n";
            } else {
                for (const Tableau& t : X) std::cout << tableau_line(t) << "\n";
                std::cout << "count: " << X.size() << "\n";
            }
        } else if (*cmd_prom) {
            Tableau t = tableau_from_json(json::parse(prom_tableau));
            if (prom_power >= 0)
                t = promote(t, prom_m, prom_power);
            else
                for (long long i = 0; i < -prom_power; ++i) t = promote_inverse(t, prom_m);
            std::cout << (prom_json ? to_json(t).dump() : tableau_line(t)) << "\n";
        } else if (*cmd_orb) {
            std::vector<Tableau> X;
            int m = 0;
            if (orb_family == "shst") {
                X = enumerate_shst(orb_a, orb_b, orb_n);
                m = orb_a + orb_b + 1;
            } else if (orb_family == "sm") {
                Partition nu = parse_partition(orb_nu);
                X = enumerate_sm(nu, orb_n);
                m = static_cast<int>(nu.size());
            } else if (orb_family == "ribbon") {
                Composition alpha(parse_int_list(orb_alpha));
                X = enumerate_syt_ribbon(alpha);
                m = static_cast<int>(alpha.size());
            } else {
                throw std::invalid_argument("orbits: unknown family '" + orb_family + "'");
            }
            OrbitDecomposition dec = orbit_decomposition(X, m);
            if (orb_csv) {
                std::cout << "orbit_index,size,representative\n";
                for (std::size_t i = 0; i < dec.orbits.size(); ++i)
                    std::cout << i << "," << dec.orbits[i].size() << ",\""
                              << tableau_line(dec.orbits[i].elements.front()) << "\"\n";
            } else if (orb_json) {
                json sizes = json::array();
                for (std::size_t s : dec.sizes()) sizes.push_back(s);
                std::cout << json{{"sizes", sizes}, {"order", dec.order}}.dump() << "\n";
            } else {
                std::cout << "sizes: ";
                std::vector<std::size_t> sizes = dec.sizes();
                for (std::size_t i = 0; i < sizes.size(); ++i)
                    std::cout << (i ? "," : "") << sizes[i];
                std::cout << "; order: " << dec.order << "\n";
            }
        } else if (*cmd_chg) {
            Word w = parse_int_list(chg_word);
            std::vector<Word> subs = standard_subwords(w);
            DepthSequence depths = depth_sequence(w);
            if (chg_json) {
                json out{{"charge", charge(w)},
                         {"cocharge", cocharge(w)},
                         {"depths", depths.depths},
                         {"subwords", subs}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "charge: " << charge(w) << "\n";
                std::cout << "cocharge: " << cocharge(w) << "\n";
                std::cout << "depths:";
                for (int d : depths.depths) std::cout << " " << d;
                std::cout << "\nsubwords:\n";
                for (const Word& sub : subs) {
                    for (std::size_t i = 0; i < sub.size(); ++i)
                        std::cout << (i ? "," : "  ") << sub[i];
                    std::cout << "\n";
                }
            }
        } else if (*cmd_kf) {
            SkewShape shape = parse_skew_shape(kf_shape);
            Composition content(parse_int_list(kf_content));
            QPoly f = kf_modified ? modified_kf(shape, content)
                                  : kostka_foulkes_sorted(shape, content);
            std::cout << (kf_json ? to_json(f).dump() : f.to_string()) << "\n";
        } else if (*cmd_mac) {
            QPoly f = macmahon(mac_a, mac_b, mac_n);
            std::cout << (mac_json ? to_json(f).dump() : f.to_string()) << "\n";
        } else if (*cmd_rib) {
            long long count = count_ribbon_tableaux(parse_skew_shape(rib_shape),
                                                    Composition(parse_int_list(rib_content)),
                                                    rib_k);
            if (rib_json)
                std::cout << json{{"count", count}}.dump() << "\n";
            else
                std::cout << count << "\n";
        } else if (*cmd_rsk) {
            Biword w;
            if (!rsk_tableau.empty()) {
                Partition nu = parse_partition(rsk_nu);
                Tableau t = tableau_from_json(json::parse(rsk_tableau));
                w = matrix_to_biword(tableau_to_matrix(t, nu, rsk_n));
            } else {
                w = biword_from_json(json{{"top", parse_int_list(rsk_top)},
                                          {"bottom", parse_int_list(rsk_bottom)}});
            }
            auto [P, Q] = rsk(w);
            if (rsk_json)
                std::cout << json{{"P", to_json(P)}, {"Q", to_json(Q)}}.dump() << "\n";
            else
                std::cout << "P: " << tableau_line(P) << "\nQ: " << tableau_line(Q)
                          << "\n";
        } else if (*cmd_csp || *cmd_bi) {
            InstanceFlags& flags = *cmd_csp ? csp_flags : bi_flags;
            bool as_json = *cmd_csp ? csp_json : bi_json;
            CspInstance inst = flags.build();
            if (inst.bivariate != static_cast<bool>(*cmd_bi))
                throw std::invalid_argument(
                    inst.bivariate ? "instance is bivariate; use the bicsp subcommand"
                                   : "instance is univariate; use the csp subcommand");
            CheckReport rep = inst.run();
            print_report(rep, as_json);
            return rep.pass ? 0 : 1;
        } else if (*cmd_shift) {
            QPoly f;
            std::vector<int> coeffs = parse_int_list(shift_coeffs);
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                f.add_term(static_cast<long>(i), coeffs[i]);
            std::optional<long> e = find_shift(f, shift_n);
            if (shift_json)
                std::cout << json{{"shift", e ? json(*e) : json(nullptr)}}.dump() << "\n";
            else if (e)
                std::cout << "E = " << *e << "\n";
            else
                std::cout << "none exists\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
