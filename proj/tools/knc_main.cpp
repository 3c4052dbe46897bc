// knc: command-line front end for type-C Kashiwara-Nakashima tableau
// combinatorics: validation, splitting, insertion, crystal graphs, key maps,
// Demazure crystals and polynomials, Bruhat queries, and evacuation.
//
// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knc/column_ops.hpp"
#include "knc/demazure.hpp"
#include "knc/evacuation.hpp"
#include "knc/keys.hpp"
#include "knc/kn_tableaux.hpp"
#include "knc/plactic.hpp"
#include "knc/reshape.hpp"
#include "knc/tableau_crystal.hpp"
#include "knc/weyl.hpp"

namespace {

using nlohmann::json;

knc::Tableau load_tableau(const std::string& spec) {
    if (spec == "-") return knc::read_tableau(std::cin);
    std::ifstream in(spec);
    if (!in) throw knc::input_error("cannot open tableau file '" + spec + "'");
    return knc::read_tableau(in);
}

json tableau_json(const knc::Tableau& t) {
    json j;
    j["outer"] = t.shape.outer;
    j["inner"] = t.shape.inner;
    j["rows"] = t.rows();
    return j;
}

void print_tableau(const knc::Tableau& t, const std::string& format) {
    if (format == "json")
        std::cout << tableau_json(t).dump(2) << "\n";
    else if (t.empty())
        std::cout << "(empty tableau)\n";
    else
        std::cout << knc::format_tableau(t);
}

void print_tableau_list(const std::vector<knc::Tableau>& ts, const std::string& format) {
    if (format == "json") {
        json j = json::array();
        for (const auto& t : ts) j.push_back(tableau_json(t));
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << knc::format_tableau(ts[i]);
    }
}

json polynomial_json(const knc::LaurentPolynomial& p) {
    json j = json::array();
    for (const auto& [e, c] : p) j.push_back({{"exponent", e}, {"coefficient", c}});
    return j;
}

knc::WeightVector parse_weight(const std::string& text, int rank) {
    auto v = knc::parse_int_csv(text);
    if (rank > 0 && static_cast<int>(v.size()) != rank)
        throw knc::input_error("weight vector length does not match rank");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"type-C Kashiwara-Nakashima tableau crystal toolkit"};
    app.require_subcommand(1);

    int rank = 0;
    std::string word_text, tableau_spec, shape_text, inner_text, side = "right", format = "text";
    std::vector<std::string> weight_texts;
    bool atom_flag = false;

    auto add_rank = [&](CLI::App* cmd, bool required = true) {
        auto opt = cmd->add_option("--rank,-n", rank, "rank n of the alphabet [+-n]");
        if (required) opt->required();
    };
    auto add_format = [&](CLI::App* cmd, const std::string& choices = "text,json") {
        cmd->add_option("--format", format, "output format (" + choices + ")");
    };

    auto* validate = app.add_subcommand("validate", "check a filling for KN validity");
    add_rank(validate);
    validate->add_option("--tableau", tableau_spec, "tableau file, or - for stdin")->required();

    auto* split_cmd = app.add_subcommand("split", "split form of a KN tableau");
    add_rank(split_cmd);
    split_cmd->add_option("--tableau", tableau_spec)->required();
    add_format(split_cmd);

    auto* insert_cmd = app.add_subcommand("insert", "insertion tableau P of a word");
    add_rank(insert_cmd);
    insert_cmd->add_option("--word", word_text, "comma-separated letters")->required();
    add_format(insert_cmd);

    auto* rs_cmd = app.add_subcommand("rs", "Robinson-Schensted pair (P, Q)");
    add_rank(rs_cmd);
    rs_cmd->add_option("--word", word_text)->required();
    add_format(rs_cmd);

    auto* rectify_cmd = app.add_subcommand("rectify", "rectification of a skew KN tableau");
    add_rank(rectify_cmd);
    rectify_cmd->add_option("--tableau", tableau_spec)->required();
    add_format(rectify_cmd);

    auto* reshape_cmd = app.add_subcommand("reshape", "frank reshape to a target skew shape");
    add_rank(reshape_cmd);
    reshape_cmd->add_option("--tableau", tableau_spec)->required();
    reshape_cmd->add_option("--shape", shape_text, "target outer shape")->required();
    reshape_cmd->add_option("--inner", inner_text, "target inner shape");
    add_format(reshape_cmd);

    auto* crystal_cmd = app.add_subcommand("crystal", "crystal graph of KN(shape, n)");
    add_rank(crystal_cmd);
    crystal_cmd->add_option("--shape", shape_text)->required();
    add_format(crystal_cmd, "text,dot,json");

    auto* key_cmd = app.add_subcommand("key", "right or left key of a KN tableau");
    add_rank(key_cmd);
    key_cmd->add_option("--tableau", tableau_spec)->required();
    key_cmd->add_option("--side", side, "right or left");
    add_format(key_cmd);

    auto* atom_cmd = app.add_subcommand("atom", "Demazure atom of an orbit weight");
    add_rank(atom_cmd, false);
    atom_cmd->add_option("--weight", weight_texts, "orbit weight vector")->required();
    add_format(atom_cmd);

    auto* demazure_cmd = app.add_subcommand("demazure", "Demazure crystal of an orbit weight");
    add_rank(demazure_cmd, false);
    demazure_cmd->add_option("--weight", weight_texts)->required();
    add_format(demazure_cmd);

    auto* charpoly_cmd = app.add_subcommand("charpoly", "key polynomial (or atom polynomial)");
    add_rank(charpoly_cmd, false);
    charpoly_cmd->add_option("--weight", weight_texts)->required();
    charpoly_cmd->add_flag("--atom", atom_flag, "atom polynomial instead of key polynomial");
    add_format(charpoly_cmd);

    auto* bruhat_cmd = app.add_subcommand("bruhat", "Bruhat comparison of two orbit weights");
    add_rank(bruhat_cmd, false);
    bruhat_cmd->add_option("--weight", weight_texts, "two weight vectors (give --weight twice)")
        ->required()
        ->expected(2);

    auto* coset_cmd = app.add_subcommand("coset-rep", "minimal-length coset representative");
    add_rank(coset_cmd, false);
    coset_cmd->add_option("--weight", weight_texts)->required();

    auto* evacuate_cmd = app.add_subcommand("evacuate", "type-C evacuation (Lusztig involution)");
    add_rank(evacuate_cmd);
    evacuate_cmd->add_option("--tableau", tableau_spec)->required();
    add_format(evacuate_cmd);

    auto* orbit_cmd = app.add_subcommand("orbit", "B_n-orbit of a partition");
    add_rank(orbit_cmd);
    orbit_cmd->add_option("--shape", shape_text)->required();
    add_format(orbit_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        auto weight_arg = [&](size_t idx = 0) {
            knc::WeightVector v = parse_weight(weight_texts.at(idx), rank);
            if (rank == 0) rank = static_cast<int>(v.size());
            return v;
        };

        if (validate->parsed()) {
            auto t = load_tableau(tableau_spec);
            auto check = knc::check_kn(t, rank);
            if (check) {
                std::cout << "valid KN tableau\n";
            } else {
                std::cout << "not a KN tableau: " << check.detail << "\n";
                return 1;
            }
        } else if (split_cmd->parsed()) {
            print_tableau(knc::split_form(load_tableau(tableau_spec), rank), format);
        } else if (insert_cmd->parsed()) {
            print_tableau(knc::insert(knc::parse_int_csv(word_text), rank), format);
        } else if (rs_cmd->parsed()) {
            auto pair = knc::rs(knc::parse_int_csv(word_text), rank);
            if (format == "json") {
                json j;
                j["p"] = tableau_json(pair.p);
                j["q"] = pair.q;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "P:\n";
                print_tableau(pair.p, format);
                std::cout << "Q:\n";
                for (const auto& sh : pair.q) std::cout << knc::format_int_csv(sh) << "\n";
            }
        } else if (rectify_cmd->parsed()) {
            print_tableau(knc::rectify(load_tableau(tableau_spec), rank), format);
        } else if (reshape_cmd->parsed()) {
            knc::SkewShape target(knc::parse_int_csv(shape_text),
                                  inner_text.empty() ? knc::Partition{} : knc::parse_int_csv(inner_text));
            print_tableau(knc::reshape(load_tableau(tableau_spec), target, rank), format);
        } else if (crystal_cmd->parsed()) {
            auto g = knc::build_crystal(knc::parse_int_csv(shape_text), rank);
            if (format == "dot") {
                std::cout << knc::crystal_to_dot(g);
            } else if (format == "json") {
                std::cout << knc::crystal_to_json(g);
            } else {
                std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
                for (const auto& e : g.edges)
                    std::cout << e[0] << " -" << e[1] << "-> " << e[2] << "\n";
            }
        } else if (key_cmd->parsed()) {
            auto t = load_tableau(tableau_spec);
            if (side != "right" && side != "left") throw knc::input_error("--side must be right or left");
            print_tableau(side == "right" ? knc::right_key(t, rank) : knc::left_key(t, rank), format);
        } else if (atom_cmd->parsed()) {
            auto v = weight_arg();
            print_tableau_list(knc::atom_via_keys(v, rank), format);
        } else if (demazure_cmd->parsed()) {
            auto v = weight_arg();
            print_tableau_list(knc::demazure_crystal(v, rank), format);
        } else if (charpoly_cmd->parsed()) {
            auto v = weight_arg();
            auto p = atom_flag ? knc::atom_polynomial(v, rank) : knc::key_polynomial(v, rank);
            if (format == "json")
                std::cout << polynomial_json(p).dump(2) << "\n";
            else
                std::cout << knc::format_polynomial(p);
        } else if (bruhat_cmd->parsed()) {
            auto v = weight_arg(0);
            auto u = parse_weight(weight_texts.at(1), rank);
            std::cout << (knc::bruhat_leq(v, u, rank) ? "true" : "false") << "\n";
        } else if (coset_cmd->parsed()) {
            auto v = weight_arg();
            std::cout << knc::format_int_csv(knc::minimal_coset_rep(v, rank).window) << "\n";
        } else if (evacuate_cmd->parsed()) {
            print_tableau(knc::evacuate(load_tableau(tableau_spec), rank), format);
        } else if (orbit_cmd->parsed()) {
            auto vs = knc::orbit(knc::parse_int_csv(shape_text), rank);
            if (format == "json") {
                json j = json::array();
                for (const auto& v : vs) j.push_back(v);
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& v : vs) std::cout << knc::format_int_csv(v) << "\n";
            }
        }
    } catch (const knc::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const knc::invariant_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
