#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mse/certify.hpp"
#include "mse/embedding.hpp"
#include "mse/errors.hpp"
#include "mse/geometry.hpp"
#include "mse/instance.hpp"
#include "mse/scalar.hpp"
#include "mse/search.hpp"

namespace mse {

/// JSON file formats.  Keys are emitted in sorted order and rationals are
/// canonical "p/q" strings, so writing is deterministic and read-write
/// round trips are byte-stable.

using Json = nlohmann::json;

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

// ---- rationals -----------------------------------------------------------

inline Json rationals_to_json(const std::vector<Scalar>& values) {
    Json arr = Json::array();
    for (const Scalar& v : values) arr.push_back(scalar_to_string(v));
    return arr;
}

inline std::vector<Scalar> rationals_from_json(const Json& arr) {
    if (!arr.is_array()) throw Error("expected an array of rationals");
    std::vector<Scalar> values;
    values.reserve(arr.size());
    for (const auto& v : arr) {
        if (v.is_number_integer()) {
            values.push_back(Scalar(static_cast<long long>(v.get<long long>())));
        } else if (v.is_string()) {
            values.push_back(scalar_from_string(v.get<std::string>()));
        } else {
            throw Error("expected a rational as \"p/q\" string");
        }
    }
    return values;
}

// ---- instances ------------------------------------------------------------

inline Json instance_to_json(const Instance& inst) {
    Json j;
    if (inst.dimension) j["dimension"] = *inst.dimension;
    if (!inst.family.empty()) j["family"] = inst.family;
    j["labels"] = inst.labels;
    Json perms = Json::array();
    for (const Permutation& p : inst.perms) perms.push_back(p.order());
    j["permutations"] = std::move(perms);
    if (!inst.groups.empty()) {
        Json groups = Json::array();
        for (const GroupSpec& g : inst.groups) {
            Json gj;
            gj["members"] = g.members;
            if (!g.pi1.empty() || !g.pi2.empty()) {
                gj["pi1"] = g.pi1;
                gj["pi2"] = g.pi2;
            }
            if (g.patterns) gj["patterns"] = *g.patterns;
            if (g.reversal) {
                Json rev = Json::array();
                for (bool b : *g.reversal) rev.push_back(b ? 1 : 0);
                gj["reversal"] = std::move(rev);
            }
            groups.push_back(std::move(gj));
        }
        j["groups"] = std::move(groups);
    }
    if (!inst.original_labels.empty()) j["original_labels"] = inst.original_labels;
    if (!inst.label_names.empty()) j["label_names"] = inst.label_names;
    return j;
}

inline Instance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("permutations")) {
        throw Error("instance file must carry \"labels\" and \"permutations\"");
    }
    Instance inst;
    inst.labels = j.at("labels").get<std::vector<int>>();
    for (const auto& p : j.at("permutations")) {
        inst.perms.push_back(Permutation(p.get<std::vector<int>>()));
    }
    if (j.contains("dimension")) inst.dimension = j.at("dimension").get<int>();
    if (j.contains("family")) inst.family = j.at("family").get<std::string>();
    if (j.contains("original_labels")) inst.original_labels = j.at("original_labels").get<std::vector<int>>();
    if (j.contains("label_names")) inst.label_names = j.at("label_names").get<std::vector<std::string>>();
    if (j.contains("groups")) {
        for (const auto& gj : j.at("groups")) {
            GroupSpec g;
            g.members = gj.at("members").get<std::vector<int>>();
            if (gj.contains("pi1")) g.pi1 = gj.at("pi1").get<std::vector<int>>();
            if (gj.contains("pi2")) g.pi2 = gj.at("pi2").get<std::vector<int>>();
            if (gj.contains("patterns")) g.patterns = gj.at("patterns").get<std::vector<std::vector<int>>>();
            if (gj.contains("reversal")) {
                std::vector<bool> rev;
                for (const auto& b : gj.at("reversal")) rev.push_back(b.get<int>() != 0);
                g.reversal = std::move(rev);
            }
            inst.groups.push_back(std::move(g));
        }
    }
    return inst;
}

// ---- embeddings -----------------------------------------------------------

inline Json monotone_to_json(const MonotoneEmbedding& emb) {
    Json j;
    j["dimension"] = emb.dimension;
    Json points = Json::object();
    for (const auto& [label, p] : emb.points) {
        points[std::to_string(label)] = rationals_to_json(p.coords);
    }
    j["points"] = std::move(points);
    Json dirs = Json::array();
    for (const Direction& v : emb.directions) dirs.push_back(rationals_to_json(v.coords));
    j["directions"] = std::move(dirs);
    return j;
}

inline MonotoneEmbedding monotone_from_json(const Json& j) {
    MonotoneEmbedding emb;
    emb.dimension = j.at("dimension").get<std::size_t>();
    for (const auto& [key, value] : j.at("points").items()) {
        emb.points.emplace(std::stoi(key), Point(rationals_from_json(value)));
    }
    for (const auto& v : j.at("directions")) {
        emb.directions.push_back(Direction(rationals_from_json(v)));
    }
    return emb;
}

inline Json parallel_to_json(const ParallelEmbedding& emb) {
    Json j;
    j["dimension"] = emb.dimension;
    Json planes = Json::object();
    for (const auto& [label, h] : emb.hyperplanes) {
        Json hj;
        hj["alpha"] = rationals_to_json(h.alpha);
        hj["alpha0"] = scalar_to_string(h.alpha0);
        planes[std::to_string(label)] = std::move(hj);
    }
    j["hyperplanes"] = std::move(planes);
    Json lines = Json::array();
    for (const VerticalLine& line : emb.lines) lines.push_back(rationals_to_json(line.base));
    j["lines"] = std::move(lines);
    return j;
}

inline ParallelEmbedding parallel_from_json(const Json& j) {
    ParallelEmbedding emb;
    emb.dimension = j.at("dimension").get<std::size_t>();
    for (const auto& [key, value] : j.at("hyperplanes").items()) {
        Scalar alpha0;
        const auto& a0 = value.at("alpha0");
        if (a0.is_number_integer()) {
            alpha0 = Scalar(static_cast<long long>(a0.get<long long>()));
        } else {
            alpha0 = scalar_from_string(a0.get<std::string>());
        }
        emb.hyperplanes.emplace(std::stoi(key),
                                Hyperplane(rationals_from_json(value.at("alpha")), alpha0));
    }
    for (const auto& base : j.at("lines")) {
        emb.lines.push_back(VerticalLine(rationals_from_json(base)));
    }
    return emb;
}

// ---- certificates ---------------------------------------------------------

inline Json certificate2d_to_json(const Certificate2D& cert) {
    Json j;
    j["refuted"] = cert.refuted;
    Json orders = Json::array();
    for (const WeakOrderCheck& check : cert.orders) {
        Json cj;
        cj["order"] = check.order;
        cj["violated"] = check.violated;
        if (check.pair) {
            Json w;
            w["pair"] = {check.pair->u, check.pair->v};
            Json signs = Json::array();
            for (int s : check.pair->signs) signs.push_back(s > 0 ? "+" : "-");
            w["signs"] = std::move(signs);
            cj["witness"] = std::move(w);
        } else if (!check.tie_block.empty()) {
            Json w;
            w["tie_block"] = check.tie_block;
            cj["witness"] = std::move(w);
        }
        orders.push_back(std::move(cj));
    }
    j["weak_orders"] = std::move(orders);
    return j;
}

inline Json monotone_certificate_to_json(const MonotoneCertificate& cert) {
    Json j;
    j["verdict"] = cert.not_embeddable ? "NOT-EMBEDDABLE" : "NOT-REFUTED";
    Json patterns = Json::array();
    for (const PatternCertificate& p : cert.patterns) {
        Json pj;
        Json rev = Json::array();
        for (bool b : p.reversed) rev.push_back(b ? 1 : 0);
        pj["reversed"] = std::move(rev);
        pj["certificate"] = certificate2d_to_json(p.certificate);
        patterns.push_back(std::move(pj));
    }
    j["patterns"] = std::move(patterns);
    return j;
}

inline Json placement_witness_to_json(const PlacementWitness& w, const Point& candidate) {
    Json j;
    j["candidate"] = rationals_to_json(candidate.coords);
    j["pi1"] = w.pi1;
    j["pi2"] = w.pi2;
    j["group_labels"] = w.group_labels;
    j["farkas"] = rationals_to_json(w.farkas);
    return j;
}

inline Json compact_witness_to_json(const std::vector<std::vector<int>>& violated,
                                    const Point& candidate) {
    Json j;
    j["candidate"] = rationals_to_json(candidate.coords);
    j["violated"] = violated;
    j["witness"] = violated.front();
    return j;
}

// ---- search reports -------------------------------------------------------

inline Json search_report_to_json(const SearchReport& report) {
    Json j;
    j["outcome"] = report.outcome == SearchReport::Outcome::Found ? "found" : "not-found";
    j["samples_tried"] = report.samples_tried;
    j["budget"] = report.budget;
    j["seed"] = report.seed;
    j["lp_pivots"] = report.lp_pivots;
    if (report.embedding) j["embedding"] = monotone_to_json(*report.embedding);
    return j;
}

} // namespace mse
