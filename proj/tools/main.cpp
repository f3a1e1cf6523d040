// rankforge: exact-arithmetic toolkit for rank-metric codes over finite fields.
//
// Exit codes: 0 success, 2 invalid input, 3 enumeration budget exceeded,
// 4 inconsistent distribution input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <rankforge/anticode.hpp>
#include <rankforge/code.hpp>
#include <rankforge/corpus.hpp>
#include <rankforge/errors.hpp>
#include <rankforge/field.hpp>
#include <rankforge/macwilliams.hpp>
#include <rankforge/mrd.hpp>
#include <rankforge/serialize.hpp>

namespace rf = rankforge;
using rf::Json;

namespace {

struct CliConfig {
    std::uint64_t budget = rf::kDefaultBudget;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string output;
};

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw rf::invalid_parameter_error("empty entry in list '" + s + "'");
        out.push_back(std::stoull(tok));
    }
    return out;
}

// accepts "1,8,16" or a JSON array of integers / decimal strings
rf::WeightDistribution parse_weights(const std::string& s) {
    rf::WeightDistribution W;
    if (!s.empty() && s.front() == '[') {
        Json j = Json::parse(s, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw rf::invalid_parameter_error("weights: malformed JSON array");
        return rf::weights_from_json(j);
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw rf::invalid_parameter_error("empty entry in weight list");
        W.counts.emplace_back(tok);
    }
    if (W.counts.empty()) throw rf::invalid_parameter_error("empty weight list");
    return W;
}

// "1,1:2,2" -> {(1,1), (2,2)}
std::set<std::pair<int, int>> parse_positions(const std::string& s) {
    std::set<std::pair<int, int>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        auto comma = tok.find(',');
        if (comma == std::string::npos)
            throw rf::invalid_parameter_error("positions: expected i,j pairs separated by ':'");
        out.emplace(std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1)));
    }
    return out;
}

void emit_table(std::ostream& os, const Json& j, const std::string& prefix = "") {
    if (!j.is_object()) {
        os << j.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            emit_table(os, value, name);
        } else if (value.is_array()) {
            os << name << ":";
            for (const auto& e : value) os << " " << (e.is_string() ? e.get<std::string>() : e.dump());
            os << "\n";
        } else {
            os << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

void emit(const CliConfig& cfg, const Json& j) {
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw rf::invalid_parameter_error("cannot write file: " + cfg.output);
        out << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "table")
        emit_table(std::cout, j);
    else
        std::cout << j.dump() << "\n";
}

rf::AnyCode load_code(const std::string& path) { return rf::code_from_json(rf::load_json_file(path)); }

rf::LinearMatrixCode as_linear(const rf::AnyCode& code) {
    if (const auto* lin = std::get_if<rf::LinearMatrixCode>(&code)) return *lin;
    if (const auto* vec = std::get_if<rf::VectorCode>(&code))
        return rf::gamma_expand(*vec, rf::ExtensionBasis::polynomial_basis(vec->field()));
    throw rf::invalid_parameter_error("this operation needs a linear code (matrix-linear or vector)");
}

rf::WeightDistribution weights_of(const rf::AnyCode& code, std::uint64_t budget) {
    if (const auto* set = std::get_if<rf::GeneralCode>(&code)) return rf::weight_distribution(*set, budget);
    return rf::weight_distribution(as_linear(code), budget);
}

Json mrd_verdict_json(const rf::MrdVerdict& v) {
    Json out;
    out["mrd"] = v.mrd;
    if (v.d)
        out["d"] = *v.d;
    else
        out["d"] = nullptr;
    out["size"] = v.size.str();
    if (v.bound)
        out["bound"] = v.bound->str();
    else
        out["bound"] = nullptr;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric codes over finite fields: construction, duality, weight "
                 "distributions, MacWilliams transforms, MRD codes and anticodes"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--budget", cfg.budget, "enumeration budget (max objects visited)")
        ->envname("RANKFORGE_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", cfg.seed, "seed for corpus-based checks");
    app.add_option("-o,--output", cfg.output, "write result to a file instead of stdout");

    auto* field_cmd = app.add_subcommand("field", "construct and print a field spec")->fallthrough();
    std::uint32_t fp = 0, fdeg = 0, fsub = 0;
    std::string fmod;
    field_cmd->add_option("--p", fp, "prime characteristic")->required();
    field_cmd->add_option("--degree", fdeg, "extension degree over F_p")->required();
    field_cmd->add_option("--modulus", fmod, "monic irreducible, little-endian coefficients c0,c1,...");
    field_cmd->add_option("--sub-degree", fsub, "designates the subfield F_q, q = p^sub_degree");

    auto* code_cmd = app.add_subcommand("code", "code construction and analysis")->fallthrough();
    code_cmd->require_subcommand(1);

    auto* gab_cmd = code_cmd->add_subcommand("gabidulin", "evaluation-code MRD construction")->fallthrough();
    std::uint64_t gq = 0;
    int gm = 0, gk = 0, gd = 0;
    std::string gpoints;
    gab_cmd->add_option("--q", gq, "subfield size (prime power)")->required();
    gab_cmd->add_option("--m", gm, "extension degree")->required();
    gab_cmd->add_option("--k", gk, "code length")->required();
    gab_cmd->add_option("--d", gd, "design distance")->required();
    gab_cmd->add_option("--points", gpoints, "evaluation points as canonical F_{q^m} values");

    auto* anti_cmd = code_cmd->add_subcommand("anticode", "standard optimal anticode")->fallthrough();
    std::uint64_t aq = 0;
    int ak = 0, am = 0, adelta = 0;
    anti_cmd->add_option("--q", aq)->required();
    anti_cmd->add_option("--k", ak)->required();
    anti_cmd->add_option("--m", am)->required();
    anti_cmd->add_option("--delta", adelta)->required();

    auto* dual_cmd = code_cmd->add_subcommand("dual", "trace-dual or vector dual of a code file")->fallthrough();
    std::string dual_file;
    dual_cmd->add_option("file", dual_file, "code file")->required();

    auto* expand_cmd = code_cmd->add_subcommand("expand", "matrix expansion of a vector code")->fallthrough();
    std::string expand_file, expand_basis;
    expand_cmd->add_option("file", expand_file, "vector code file")->required();
    expand_cmd->add_option("--basis", expand_basis, "expansion basis as canonical F_{q^m} values");

    auto* weights_cmd = code_cmd->add_subcommand("weights", "weight distribution by enumeration")->fallthrough();
    std::string weights_file;
    weights_cmd->add_option("file", weights_file)->required();

    auto* dist_cmd = code_cmd->add_subcommand("distances", "distance distribution")->fallthrough();
    std::string dist_file;
    dist_cmd->add_option("file", dist_file)->required();

    auto* mw_cmd = code_cmd->add_subcommand("macwilliams", "dual weights via the MacWilliams transform")->fallthrough();
    std::string mw_weights, mw_size;
    std::uint64_t mw_q = 0;
    int mw_k = 0, mw_m = 0;
    mw_cmd->add_option("--weights", mw_weights, "W_0,...,W_k")->required();
    mw_cmd->add_option("--q", mw_q)->required();
    mw_cmd->add_option("--k", mw_k)->required();
    mw_cmd->add_option("--m", mw_m)->required();
    mw_cmd->add_option("--size", mw_size, "|C| (decimal)")->required();

    auto* mom_cmd = code_cmd->add_subcommand("moments", "binomial moments of a weight distribution")->fallthrough();
    std::string mom_weights, mom_size;
    std::uint64_t mom_q = 0;
    int mom_k = 0, mom_m = 0, mom_nu = -1;
    mom_cmd->add_option("--weights", mom_weights)->required();
    mom_cmd->add_option("--q", mom_q)->required();
    mom_cmd->add_option("--k", mom_k)->required();
    mom_cmd->add_option("--m", mom_m)->required();
    mom_cmd->add_option("--size", mom_size)->required();
    mom_cmd->add_option("--nu", mom_nu, "single moment index (default: all)");

    auto* rec_cmd = code_cmd->add_subcommand("recursion", "weight distribution from the recursion theorem")->fallthrough();
    std::uint64_t rec_q = 0;
    int rec_k = 0, rec_m = 0, rec_dim = 0, rec_d = 0, rec_dperp = 0, rec_eps = 0;
    std::string rec_middle;
    rec_cmd->add_option("--q", rec_q)->required();
    rec_cmd->add_option("--k", rec_k)->required();
    rec_cmd->add_option("--m", rec_m)->required();
    rec_cmd->add_option("--dim", rec_dim)->required();
    rec_cmd->add_option("--d", rec_d)->required();
    rec_cmd->add_option("--dperp", rec_dperp)->required();
    rec_cmd->add_option("--epsilon", rec_eps)->required();
    rec_cmd->add_option("--middle", rec_middle, "known weights W_d,...,W_{k-dperp}");

    auto* check_cmd = code_cmd->add_subcommand("check", "MRD / anticode verdicts")->fallthrough();
    std::string check_file;
    bool check_mrd = false, check_criterion = false;
    int check_delta = -1;
    check_cmd->add_flag("--mrd", check_mrd, "check the Singleton-like bound at the actual distance");
    check_cmd->add_option("--anticode", check_delta, "check the delta-anticode property and optimality");
    check_cmd->add_flag("--criterion", check_criterion,
                        "also run the MRD-intersection optimality criterion (uses --seed)");
    check_cmd->add_option("file", check_file)->required();

    auto* count_cmd = app.add_subcommand("count", "matrices of given rank with zero diagonal positions")->fallthrough();
    std::uint64_t cq = 0;
    int ck = 0, cm = 0, cr = -1;
    std::string cpos;
    count_cmd->add_option("--k", ck)->required();
    count_cmd->add_option("--m", cm)->required();
    count_cmd->add_option("--q", cq)->required();
    count_cmd->add_option("--positions", cpos, "diagonal positions i,i separated by ':'")->required();
    count_cmd->add_option("--rank", cr)->required();

    try {
        app.parse(argc, argv);

        if (*field_cmd) {
            rf::PrimePoly modulus;
            if (!fmod.empty())
                for (auto c : parse_u64_list(fmod)) modulus.push_back(static_cast<std::uint32_t>(c));
            auto spec = rf::FieldSpec::make(fp, fdeg, std::move(modulus), fsub);
            emit(cfg, rf::field_to_json(spec));
        } else if (*gab_cmd) {
            auto spec = rf::FieldSpec::make_tower(gq, gm);
            std::vector<std::uint64_t> points;
            if (!gpoints.empty()) points = parse_u64_list(gpoints);
            auto C = rf::gabidulin_code(rf::GabidulinSpec(spec, gk, gd, std::move(points)));
            emit(cfg, rf::code_to_json(C));
        } else if (*anti_cmd) {
            auto spec = rf::FieldSpec::make_prime_power(aq);
            emit(cfg, rf::code_to_json(rf::standard_anticode(spec, ak, am, adelta)));
        } else if (*dual_cmd) {
            auto code = load_code(dual_file);
            if (const auto* lin = std::get_if<rf::LinearMatrixCode>(&code))
                emit(cfg, rf::code_to_json(rf::dual_code(*lin)));
            else if (const auto* vec = std::get_if<rf::VectorCode>(&code))
                emit(cfg, rf::code_to_json(rf::vector_dual(*vec)));
            else
                throw rf::invalid_parameter_error("dual: defined for linear codes only");
        } else if (*expand_cmd) {
            auto code = load_code(expand_file);
            const auto* vec = std::get_if<rf::VectorCode>(&code);
            if (!vec) throw rf::invalid_parameter_error("expand: input must be a vector code");
            auto basis = expand_basis.empty()
                             ? rf::ExtensionBasis::polynomial_basis(vec->field())
                             : rf::ExtensionBasis(vec->field(), parse_u64_list(expand_basis));
            emit(cfg, rf::code_to_json(rf::gamma_expand(*vec, basis)));
        } else if (*weights_cmd) {
            Json out;
            out["W"] = rf::weights_to_json(weights_of(load_code(weights_file), cfg.budget));
            emit(cfg, out);
        } else if (*dist_cmd) {
            auto code = load_code(dist_file);
            rf::DistanceDistribution D;
            if (const auto* set = std::get_if<rf::GeneralCode>(&code))
                D = rf::distance_distribution(*set, cfg.budget);
            else
                D = rf::distance_distribution(as_linear(code), cfg.budget);
            Json out;
            out["D"] = rf::distances_to_json(D);
            emit(cfg, out);
        } else if (*mw_cmd) {
            rf::CodeParams params(mw_q, mw_k, mw_m, rf::Int(mw_size));
            Json out;
            out["W_dual"] =
                rf::weights_to_json(rf::macwilliams_transform(parse_weights(mw_weights), params));
            emit(cfg, out);
        } else if (*mom_cmd) {
            rf::CodeParams params(mom_q, mom_k, mom_m, rf::Int(mom_size));
            auto W = parse_weights(mom_weights);
            Json out;
            if (mom_nu >= 0) {
                out["moment"] = rf::binomial_moment(W, mom_nu, params).str();
            } else {
                Json arr = Json::array();
                for (int nu = 0; nu <= mom_k; ++nu) arr.push_back(rf::binomial_moment(W, nu, params).str());
                out["moments"] = std::move(arr);
            }
            emit(cfg, out);
        } else if (*rec_cmd) {
            rf::RecursionInput input{rf::CodeParams::for_linear(rec_q, rec_k, rec_m, rec_dim),
                                     rec_dim,
                                     rec_d,
                                     rec_dperp,
                                     rec_eps,
                                     {}};
            if (!rec_middle.empty()) input.known = parse_weights(rec_middle).counts;
            Json out;
            out["W"] = rf::weights_to_json(rf::weight_recursion(input));
            emit(cfg, out);
        } else if (*check_cmd) {
            if (check_mrd == (check_delta >= 0))
                throw rf::invalid_parameter_error("check: pass exactly one of --mrd, --anticode");
            auto code = load_code(check_file);
            if (check_mrd) {
                rf::MrdVerdict v;
                if (const auto* set = std::get_if<rf::GeneralCode>(&code))
                    v = rf::is_mrd(*set, cfg.budget);
                else
                    v = rf::is_mrd(as_linear(code), cfg.budget);
                emit(cfg, mrd_verdict_json(v));
            } else if (const auto* set = std::get_if<rf::GeneralCode>(&code)) {
                const bool anti = rf::is_anticode(*set, check_delta, cfg.budget);
                const auto bound = rf::anticode_bound(set->m(), check_delta, set->field()->q());
                Json out;
                out["anticode"] = anti;
                out["optimal"] = anti && rf::Int(set->size()) == bound;
                out["size"] = rf::Int(set->size()).str();
                out["bound"] = bound.str();
                emit(cfg, out);
            } else {
                auto lin = as_linear(code);
                const bool anti = rf::is_anticode(lin, check_delta, cfg.budget);
                const auto bound = rf::anticode_bound(lin.m(), check_delta, lin.field()->q());
                Json out;
                out["anticode"] = anti;
                out["optimal"] = anti && lin.size() == bound;
                out["size"] = lin.size().str();
                out["bound"] = bound.str();
                if (check_criterion) {
                    auto corpus = rf::mrd_corpus(lin.field(), lin.k(), lin.m(), check_delta + 1, 25,
                                                 cfg.seed, cfg.budget);
                    out["criterion"] = rf::criterion_optimal_anticode(lin, check_delta, corpus.codes);
                    out["regime"] = corpus.exhaustive ? "exhaustive" : "sampled";
                }
                emit(cfg, out);
            }
        } else if (*count_cmd) {
            rf::ZeroPattern pattern(ck, cm, parse_positions(cpos));
            emit(cfg, Json(rf::count_zero_diagonal(pattern, cq, cr).str()));
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const rf::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rf::inconsistent_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const rf::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
