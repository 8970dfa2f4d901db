// Command-line front end: generators, rank constructions, the two duality
// transforms, verifiers, certifiers, placement refuters, direction-sampled
// search and SVG rendering, over JSON files or pipes.
//
// Exit codes: 0 success/verified, 1 usage or malformed input, 2 negative
// verification/certification/search result, 3 degeneracy.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mse/certify.hpp"
#include "mse/counterexamples.hpp"
#include "mse/embedding.hpp"
#include "mse/errors.hpp"
#include "mse/instance.hpp"
#include "mse/io.hpp"
#include "mse/prng.hpp"
#include "mse/search.hpp"
#include "mse/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;
constexpr int kExitDegenerate = 3;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw mse::Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw mse::Error("cannot open '" + path + "' for writing");
    out << content;
}

mse::Json parse_json(const std::string& text) {
    try {
        return mse::Json::parse(text);
    } catch (const mse::Json::exception& e) {
        throw mse::Error(std::string("malformed JSON: ") + e.what());
    }
}

mse::Instance load_instance(const std::string& path) {
    return mse::instance_from_json(parse_json(read_input(path)));
}

bool is_monotone_json(const mse::Json& j) {
    if (j.contains("points")) return true;
    if (j.contains("hyperplanes")) return false;
    throw mse::Error("embedding file must carry \"points\" or \"hyperplanes\"");
}

std::vector<mse::Scalar> parse_coordinates(const std::string& text) {
    std::vector<mse::Scalar> coords;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        coords.push_back(mse::scalar_from_string(item));
    }
    if (coords.empty()) throw mse::Error("--at needs comma-separated rational coordinates");
    return coords;
}

int cmd_gen(const std::string& family, int d, const std::string& out) {
    mse::Instance inst;
    if (family == "dual2d") inst = mse::gen_dual_2d();
    else if (family == "primal2d") inst = mse::gen_primal_2d();
    else if (family == "dual3d") inst = mse::gen_dual_3d();
    else if (family == "primal3d") inst = mse::gen_primal_3d();
    else if (family == "dualgen") inst = mse::gen_dual_general(d);
    else if (family == "primalgen") inst = mse::gen_primal_general(d);
    else throw mse::Error("unknown family '" + family + "' (dual2d|primal2d|dual3d|primal3d|dualgen|primalgen)");
    write_output(out, mse::dump_json(mse::instance_to_json(inst)));
    return kExitOk;
}

int cmd_embed(const std::string& input, std::size_t d, const std::string& out) {
    const mse::Instance inst = load_instance(input);
    const mse::MonotoneEmbedding emb = mse::embed_rank(inst, d);
    write_output(out, mse::dump_json(mse::monotone_to_json(emb)));
    return kExitOk;
}

int cmd_dualize(const std::string& input, const std::string& out) {
    const mse::Json j = parse_json(read_input(input));
    if (is_monotone_json(j)) {
        throw mse::Error("dualize expects a parallel embedding file (use primalize for monotone input)");
    }
    const mse::MonotoneEmbedding emb = mse::dual_to_primal(mse::parallel_from_json(j));
    write_output(out, mse::dump_json(mse::monotone_to_json(emb)));
    return kExitOk;
}

int cmd_primalize(const std::string& input, const std::string& instance_path,
                  const std::string& out, const std::string& adjusted_out) {
    const mse::Json j = parse_json(read_input(input));
    if (!is_monotone_json(j)) {
        throw mse::Error("primalize expects a monotone embedding file (use dualize for parallel input)");
    }
    const mse::Instance inst = load_instance(instance_path);
    const mse::MonotoneEmbedding tilted = mse::tilt_directions(mse::monotone_from_json(j), inst);
    const mse::PrimalToDualResult result = mse::primal_to_dual(tilted, inst);

    mse::Json out_json = mse::parallel_to_json(result.embedding);
    mse::Json reversed = mse::Json::array();
    for (bool flag : result.reversed) reversed.push_back(flag ? 1 : 0);
    out_json["reversed"] = reversed;
    write_output(out, mse::dump_json(out_json));

    std::cerr << "reversed flags:";
    for (bool flag : result.reversed) std::cerr << ' ' << (flag ? 1 : 0);
    std::cerr << '\n';
    if (!adjusted_out.empty()) {
        const mse::Instance adjusted = mse::apply_reversal(inst, result.reversed);
        write_output(adjusted_out, mse::dump_json(mse::instance_to_json(adjusted)));
    }
    return kExitOk;
}

int cmd_verify(const std::string& positional, const std::string& instance_path,
               const std::string& embedding_path) {
    std::string inst_input = instance_path;
    std::string emb_input = embedding_path;
    if (embedding_path.empty()) {
        emb_input = positional;
        if (instance_path.empty()) throw mse::Error("verify needs --instance (or --embedding with the instance piped)");
    } else if (inst_input.empty()) {
        inst_input = positional;
    }
    const mse::Instance inst = load_instance(inst_input);
    const mse::Json j = parse_json(read_input(emb_input));
    bool ok = false;
    if (is_monotone_json(j)) {
        ok = mse::verify_monotone(mse::monotone_from_json(j), inst);
    } else {
        std::string diagnostic;
        ok = mse::verify_parallel(mse::parallel_from_json(j), inst, &diagnostic);
        if (!ok && !diagnostic.empty()) std::cerr << "degenerate: " << diagnostic << '\n';
    }
    std::cerr << (ok ? "verified" : "NOT verified") << '\n';
    return ok ? kExitOk : kExitNegative;
}

/// Deterministic pseudo-random rational candidates used by the d>=3
/// certify spot checks.
mse::Point spot_candidate(std::size_t dim, mse::SplitMix64& rng) {
    std::vector<mse::Scalar> coords(dim);
    for (auto& c : coords) {
        const long num = rng.range(-12, 12);
        const long den = rng.range(1, 8);
        c = mse::Scalar(num) / mse::Scalar(den);
    }
    return mse::Point(std::move(coords));
}

int cmd_certify(const std::string& input, const std::string& mode, std::size_t spots,
                const std::string& out) {
    const mse::Instance inst = load_instance(input);
    const int d = inst.dimension.value_or(2);

    if (d == 2) {
        const bool dual_sense =
            mode == "dual" || (mode == "auto" && inst.family.rfind("dual", 0) == 0);
        if (dual_sense) {
            const mse::Certificate2D cert = mse::certify_dual_2d(inst);
            mse::Json j;
            j["verdict"] = cert.refuted ? "NOT-EMBEDDABLE" : "NOT-REFUTED";
            j["sense"] = "parallel";
            j["certificate"] = mse::certificate2d_to_json(cert);
            write_output(out, mse::dump_json(j));
            std::cerr << (cert.refuted ? "NOT-EMBEDDABLE (no parallel simultaneous embedding)"
                                       : "not refuted (no claim)")
                      << '\n';
            return cert.refuted ? kExitOk : kExitNegative;
        }
        const mse::MonotoneCertificate cert = mse::certify_monotone_2d(inst);
        mse::Json j = mse::monotone_certificate_to_json(cert);
        j["sense"] = "monotone";
        write_output(out, mse::dump_json(j));
        std::cerr << (cert.not_embeddable ? "NOT-EMBEDDABLE (no monotone simultaneous embedding)"
                                          : "not refuted (no claim)")
                  << '\n';
        return cert.not_embeddable ? kExitOk : kExitNegative;
    }

    // d >= 3: structural validation, plus placement spot-refutation for
    // the dual families.
    mse::Json j;
    const bool structure_ok = mse::validate_structure(inst);
    j["structure"] = structure_ok ? "valid" : "invalid";
    bool ok = structure_ok;
    if (structure_ok && inst.family.rfind("dual", 0) == 0) {
        const auto bases = mse::canonical_bases(static_cast<std::size_t>(d));
        mse::SplitMix64 rng(2);
        mse::Json placements = mse::Json::array();
        for (std::size_t s = 0; s < spots; ++s) {
            mse::Point candidate = spot_candidate(static_cast<std::size_t>(d) - 1, rng);
            if (inst.family == "dual3d") {
                const auto violated = mse::refute_placement_3d_compact(candidate);
                placements.push_back(mse::compact_witness_to_json(violated, candidate));
            } else {
                bool on_base = false;
                for (const auto& base : bases) on_base = on_base || base == candidate;
                if (on_base) continue;
                const mse::PlacementWitness w = mse::refute_placement(inst, bases, candidate);
                ok = ok && mse::validate_witness(bases, candidate, w.pi1);
                placements.push_back(mse::placement_witness_to_json(w, candidate));
            }
        }
        j["refuted_placements"] = std::move(placements);
    }
    j["verdict"] = ok ? "CERTIFIED" : "INVALID";
    write_output(out, mse::dump_json(j));
    std::cerr << (ok ? "certified" : "INVALID") << '\n';
    return ok ? kExitOk : kExitNegative;
}

int cmd_refute(const std::string& input, const std::string& at, const std::string& out) {
    const mse::Instance inst = load_instance(input);
    const int d = inst.dimension.value_or(2);
    if (d == 2) {
        // one refuted placement would not say much in 2D; the certifier
        // refutes every placement at once
        const mse::Certificate2D cert = mse::certify_dual_2d(inst);
        mse::Json j;
        j["routed"] = "certify_dual_2d";
        j["verdict"] = cert.refuted ? "NOT-EMBEDDABLE" : "NOT-REFUTED";
        j["certificate"] = mse::certificate2d_to_json(cert);
        write_output(out, mse::dump_json(j));
        return cert.refuted ? kExitOk : kExitNegative;
    }
    const mse::Point candidate(parse_coordinates(at));
    if (candidate.dim() != static_cast<std::size_t>(d) - 1) {
        throw mse::Error("--at needs " + std::to_string(d - 1) + " coordinates for this instance");
    }
    if (inst.family == "dual3d") {
        const auto violated = mse::refute_placement_3d_compact(candidate);
        write_output(out, mse::dump_json(mse::compact_witness_to_json(violated, candidate)));
        return kExitOk;
    }
    const auto bases = mse::canonical_bases(static_cast<std::size_t>(d));
    const mse::PlacementWitness w = mse::refute_placement(inst, bases, candidate);
    write_output(out, mse::dump_json(mse::placement_witness_to_json(w, candidate)));
    return kExitOk;
}

int cmd_search(const std::string& input, std::size_t d, std::size_t budget, std::uint64_t seed,
               const std::string& out) {
    const mse::Instance inst = load_instance(input);
    const mse::SearchReport report = mse::search_embedding(inst, d, budget, seed);
    write_output(out, mse::dump_json(mse::search_report_to_json(report)));
    const bool found = report.outcome == mse::SearchReport::Outcome::Found;
    std::cerr << (found ? "found" : "not found (no non-existence claim)") << '\n';
    return found ? kExitOk : kExitNegative;
}

int cmd_render(const std::string& input, const std::string& instance_path, const std::string& out) {
    const mse::Json j = parse_json(read_input(input));
    std::string svg;
    if (is_monotone_json(j)) {
        if (instance_path.empty()) throw mse::Error("render needs --instance for a monotone embedding");
        svg = mse::render_monotone_svg(mse::monotone_from_json(j), load_instance(instance_path));
    } else {
        svg = mse::render_parallel_svg(mse::parallel_from_json(j));
    }
    write_output(out, svg);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monotone simultaneous embeddings: exact constructions, transforms, certificates"};
    app.require_subcommand(1);

    std::string family, input, out, instance_path, embedding_path, adjusted_out, at, mode = "auto";
    int gen_d = 3;
    std::size_t dim = 2, budget = 10000, spots = 16;
    std::uint64_t seed = 0;

    auto* gen = app.add_subcommand("gen", "generate a counterexample instance");
    gen->add_option("family", family, "dual2d|primal2d|dual3d|primal3d|dualgen|primalgen")->required();
    gen->add_option("--d", gen_d, "dimension for dualgen/primalgen");
    gen->add_option("--out", out, "output file (default stdout)");

    auto* embed = app.add_subcommand("embed", "rank construction for k <= d paths");
    embed->add_option("instance", input, "instance file (default stdin)");
    embed->add_option("--d", dim, "ambient dimension")->required();
    embed->add_option("--out", out, "output file");

    auto* dualize = app.add_subcommand("dualize", "parallel embedding -> monotone embedding");
    dualize->add_option("embedding", input, "parallel embedding file (default stdin)");
    dualize->add_option("--out", out, "output file");

    auto* primalize = app.add_subcommand("primalize", "monotone embedding -> parallel embedding (tilts, reports flags)");
    primalize->add_option("embedding", input, "monotone embedding file (default stdin)");
    primalize->add_option("--instance", instance_path, "instance the embedding realizes")->required();
    primalize->add_option("--out", out, "output file");
    primalize->add_option("--adjusted-instance", adjusted_out, "write the flag-adjusted instance here");

    auto* verify = app.add_subcommand("verify", "check an embedding against an instance");
    verify->add_option("file", input, "embedding file, or instance file with --embedding");
    verify->add_option("--instance", instance_path, "instance file");
    verify->add_option("--embedding", embedding_path, "embedding file (instance then comes from stdin)");

    auto* certify = app.add_subcommand("certify", "refute embeddability / validate structure");
    certify->add_option("instance", input, "instance file (default stdin)");
    certify->add_option("--mode", mode, "auto|dual|monotone (d=2 sense)")->check(CLI::IsMember({"auto", "dual", "monotone"}));
    certify->add_option("--spots", spots, "d>=3: number of spot-refuted placements");
    certify->add_option("--out", out, "certificate output file");

    auto* refute = app.add_subcommand("refute", "refute one placement of the last line");
    refute->add_option("instance", input, "instance file (default stdin)");
    refute->add_option("--at", at, "candidate base point, e.g. \"1/4,1/4\"");
    refute->add_option("--out", out, "witness output file");

    auto* search = app.add_subcommand("search", "one-sided embedding search");
    search->add_option("instance", input, "instance file (default stdin)");
    search->add_option("--d", dim, "ambient dimension")->required();
    search->add_option("--budget", budget, "direction tuples to try");
    search->add_option("--seed", seed, "sampler seed");
    search->add_option("--out", out, "report output file");

    auto* render = app.add_subcommand("render", "SVG of a 2D embedding");
    render->add_option("embedding", input, "embedding file (default stdin)");
    render->add_option("--instance", instance_path, "instance (required for monotone embeddings)");
    render->add_option("--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, gen_d, out);
        if (embed->parsed()) return cmd_embed(input, dim, out);
        if (dualize->parsed()) return cmd_dualize(input, out);
        if (primalize->parsed()) return cmd_primalize(input, instance_path, out, adjusted_out);
        if (verify->parsed()) return cmd_verify(input, instance_path, embedding_path);
        if (certify->parsed()) return cmd_certify(input, mode, spots, out);
        if (refute->parsed()) return cmd_refute(input, at, out);
        if (search->parsed()) return cmd_search(input, dim, budget, seed, out);
        if (render->parsed()) return cmd_render(input, instance_path, out);
    } catch (const mse::DegeneracyError& e) {
        std::cerr << "degeneracy: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
