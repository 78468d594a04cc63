#include "coxroots/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "coxroots/errors.hpp"

namespace coxroots {

namespace {

int parse_label(const Json& j, const char* what) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return label_infinity;
        throw ValidationError(std::string(what) + ": only \"inf\" is a valid string label");
    }
    if (!j.is_number_integer()) throw ValidationError(std::string(what) + ": label must be an integer or \"inf\"");
    return j.get<int>();
}

Json label_json(int m) {
    if (m == label_infinity) return "inf";
    return m;
}

std::string format_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (depth < 1 || mu_max < 0 || radius < 0)
        throw ValidationError("bounds must be positive");
    if (format != "json" && format != "csv")
        throw ValidationError("format must be json or csv");
}

CoxeterMatrix parse_system_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("input document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rank"))
        throw ValidationError("input document needs a 'rank' field");
    const int n = doc["rank"].get<int>();
    if (n < 1) throw ValidationError("rank must be >= 1");

    if (doc.contains("matrix")) {
        const Json& rows = doc["matrix"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw ValidationError("'matrix' must be an n x n array");
        std::vector<int> m;
        m.reserve(static_cast<size_t>(n) * n);
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ValidationError("'matrix' must be an n x n array");
            for (const auto& cell : row) m.push_back(parse_label(cell, "matrix entry"));
        }
        CoxeterMatrix cm(n, std::move(m));
        cm.validate_or_throw();
        return cm;
    }
    if (doc.contains("cyclic")) {
        const Json& labels = doc["cyclic"];
        if (!labels.is_array() || static_cast<int>(labels.size()) != n)
            throw ValidationError("'cyclic' must list one label per cycle edge");
        if (n < 3) throw ValidationError("cyclic input needs rank >= 3");
        std::vector<int> m(static_cast<size_t>(n) * n, 2);
        for (int i = 1; i <= n; ++i) m[(i - 1) * static_cast<size_t>(n) + (i - 1)] = 1;
        for (int i = 1; i <= n; ++i) {
            int label = parse_label(labels[i - 1], "cyclic label");
            if (label != label_infinity && label < 3)
                throw ValidationError("cyclic labels must be >= 3 or \"inf\"");
            int j = i % n + 1;
            m[(i - 1) * static_cast<size_t>(n) + (j - 1)] = label;
            m[(j - 1) * static_cast<size_t>(n) + (i - 1)] = label;
        }
        CoxeterMatrix cm(n, std::move(m));
        cm.validate_or_throw();
        return cm;
    }
    throw ValidationError("input document needs 'matrix' or 'cyclic'");
}

std::string emit_system_document(const CoxeterMatrix& m) {
    Json rows = Json::array();
    for (int i = 1; i <= m.rank(); ++i) {
        Json row = Json::array();
        for (int j = 1; j <= m.rank(); ++j) row.push_back(label_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json doc{{"rank", m.rank()}, {"matrix", std::move(rows)}};
    return doc.dump(2) + "\n";
}

Json algebraic_json(const AlgebraicReal& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(rat_to_string(c));
    return Json{{"coeffs", std::move(coeffs)}, {"approx", format_double(a.approx())}};
}

Json coords_json(const Coords& v) {
    Json out = Json::array();
    for (const auto& a : v) out.push_back(algebraic_json(a));
    return out;
}

namespace {

std::string coords_text(const Coords& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].is_rational() ? rat_to_string(v[i].rational_value()) : v[i].to_string();
    }
    return s;
}

std::string orientation_bits(const std::vector<char>& o) {
    std::string s;
    for (char b : o) s += b ? '1' : '0';
    return s;
}

std::string element_id(size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%03zu", index);
    return buf;
}

Json word_json(const Word& w) {
    Json a = Json::array();
    for (int l : w) a.push_back(l);
    return a;
}

Json system_json(const CoxeterSystem& sys) {
    Json j{{"rank", sys.rank()},
           {"field_modulus", sys.context()->modulus()},
           {"field_degree", sys.context()->degree()}};
    const auto& spec = sys.detect_cyclic();
    if (spec) {
        Json labels = Json::array();
        for (int l : spec->labels) labels.push_back(label_json(l));
        j["cyclic_labels"] = std::move(labels);
    }
    return j;
}

Json verdict_json(const PreprojectiveVerdict& v) {
    Json j{{"status", status_name(v.status)}};
    switch (v.status) {
        case VerdictStatus::yes:
            j["witness"] = v.witness_power;
            break;
        case VerdictStatus::no:
            j["certificate"] = v.certificate;
            j["step"] = v.no_step;
            j["dp_before"] = v.dp_before;
            j["dp_after"] = v.dp_after;
            break;
        case VerdictStatus::unknown:
            j["certificate"] = v.certificate;
            j["bound"] = v.bound;
            break;
    }
    return j;
}

}  // namespace

CoxeterElementDescriptor parse_element_selector(const CoxeterSystem& sys, const std::string& sel) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) parts.push_back(item);
        return parts;
    };
    try {
        const auto colon = sel.find(':');
        const std::string kind = colon == std::string::npos ? "standard" : sel.substr(0, colon);
        const std::string body = colon == std::string::npos ? sel : sel.substr(colon + 1);
        if (kind == "standard") {
            auto parts = split(body, ',');
            if (parts.size() != 2) throw SelectorError("standard selector needs i,k");
            const auto& spec = sys.detect_cyclic();
            if (!spec) throw SelectorError("standard selector requires a cyclic system");
            return build_standard(sys, *spec, std::stoi(parts[0]), std::stoi(parts[1])).desc;
        }
        if (kind == "bits") {
            if (body.size() != sys.graph().edges().size())
                throw SelectorError("bits selector must give one bit per edge");
            std::vector<char> o;
            for (char c : body) {
                if (c != '0' && c != '1') throw SelectorError("bits selector must be 0/1");
                o.push_back(c == '1');
            }
            return make_descriptor(sys, o);
        }
        if (kind == "word") {
            Word w;
            for (const auto& p : split(body, ',')) w.push_back(std::stoi(p));
            return descriptor_from_word(sys, w);
        }
        throw SelectorError("unknown element selector kind '" + kind + "'");
    } catch (const SelectorError&) {
        throw;
    } catch (const std::exception& e) {
        throw SelectorError(std::string("bad element selector '") + sel + "': " + e.what());
    }
}

Coords parse_root_selector(const CoxeterSystem& sys, const std::string& sel) {
    try {
        const auto colon = sel.find(':');
        const std::string kind = colon == std::string::npos ? "coords" : sel.substr(0, colon);
        const std::string body = colon == std::string::npos ? sel : sel.substr(colon + 1);
        if (kind == "alpha") return simple_root(sys, std::stoi(body));
        if (kind == "coords") {
            std::vector<std::string> parts;
            std::string cur;
            int paren = 0;
            for (char c : body) {
                if (c == '(') ++paren;
                if (c == ')') --paren;
                if (c == ',' && paren == 0) {
                    parts.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!cur.empty()) parts.push_back(cur);
            if (static_cast<int>(parts.size()) != sys.rank())
                throw SelectorError("coords selector needs one entry per generator");
            Coords v;
            for (const auto& p : parts) {
                if (!p.empty() && p.front() == '(') {
                    if (p.back() != ')') throw SelectorError("unbalanced tuple");
                    std::vector<Rat> coeffs;
                    std::stringstream ss(p.substr(1, p.size() - 2));
                    std::string item;
                    while (std::getline(ss, item, ';')) coeffs.push_back(rat_from_string(item));
                    coeffs.resize(sys.context()->degree(), Rat(0));
                    v.push_back(AlgebraicReal(sys.context(), std::move(coeffs)));
                } else {
                    v.push_back(sys.field_rat(rat_from_string(p)));
                }
            }
            return v;
        }
        throw SelectorError("unknown root selector kind '" + kind + "'");
    } catch (const SelectorError&) {
        throw;
    } catch (const std::exception& e) {
        throw SelectorError(std::string("bad root selector '") + sel + "': " + e.what());
    }
}

Json classify_report(const CoxeterSystem& sys) {
    const Classification& c = sys.classify();
    Json minors = Json::array();
    for (Sign s : c.minor_signs)
        minors.push_back(s == Sign::positive ? "+" : (s == Sign::zero ? "0" : "-"));
    Json record{{"kind", kind_name(c.kind)},
                {"corank", c.corank},
                {"leading_minor_signs", std::move(minors)}};
    const auto& spec = sys.detect_cyclic();
    if (spec) {
        Json labels = Json::array();
        bool all3 = true;
        for (int l : spec->labels) {
            labels.push_back(label_json(l));
            if (l != 3) all3 = false;
        }
        record["cyclic_labels"] = std::move(labels);
        record["cyclic_all_labels_3"] = all3;
        record["affine_iff_all_labels_3"] = (c.kind == SystemKind::affine) == all3;
    }
    return Json{{"schema_version", report_schema_version},
                {"command", "classify"},
                {"system", system_json(sys)},
                {"records", Json::array({std::move(record)})}};
}

Json growth_report(const CoxeterSystem& sys, const ExperimentConfig& cfg) {
    cfg.validate();
    const Classification& c = sys.classify();

    if (cfg.radius > cfg.radius_guard)
        throw ResourceError("radius " + std::to_string(cfg.radius) +
                            " exceeds the guard (" + std::to_string(cfg.radius_guard) +
                            "); raise --max-radius to go further");
    Json records = Json::array();
    bool truncated = false;
    std::vector<size_t> spheres;
    try {
        spheres = ball_sizes(sys, cfg.radius, cfg.element_guard);
    } catch (const ResourceError&) {
        truncated = true;
    }
    std::vector<int> layer_counts;
    try {
        DepthLayers layers = enumerate_by_depth(sys, cfg.depth, cfg.root_guard);
        for (int r = 1; r <= cfg.depth && r <= static_cast<int>(layers.layers.size()); ++r)
            layer_counts.push_back(layers.layer_count(r));
    } catch (const ResourceError&) {
        truncated = true;
    }
    const size_t rows = std::max(spheres.size(), layer_counts.size() + 1);
    for (size_t r = 0; r < rows; ++r) {
        Json rec{{"r", r}};
        if (r < spheres.size()) rec["sphere"] = spheres[r];
        if (r >= 1 && r <= layer_counts.size()) rec["depth_layer"] = layer_counts[r - 1];
        records.push_back(std::move(rec));
    }

    Json summary{{"classification", kind_name(c.kind)}, {"truncated", truncated}};
    if (spheres.size() >= 2) {
        const double last = static_cast<double>(spheres.back());
        summary["omega_root_estimate"] =
            format_double(std::pow(last, 1.0 / (static_cast<double>(spheres.size()) - 1)));
        const double prev = static_cast<double>(spheres[spheres.size() - 2]);
        if (prev > 0) summary["omega_ratio_estimate"] = format_double(last / prev);
    }
    if (!layer_counts.empty()) {
        const size_t half = layer_counts.size() / 2;
        int max_head = 0, max_tail = 0;
        for (size_t i = 0; i < layer_counts.size(); ++i) {
            if (i < half)
                max_head = std::max(max_head, layer_counts[i]);
            else
                max_tail = std::max(max_tail, layer_counts[i]);
        }
        const int small_r = std::max<size_t>(1, layer_counts.size() / 4);
        summary["layers_bounded_over_range"] = max_tail <= max_head;
        summary["layers_grow_over_range"] =
            layer_counts.back() > layer_counts[small_r - 1];
        const bool consistent = c.kind == SystemKind::affine
                                    ? max_tail <= max_head
                                    : (c.kind == SystemKind::indefinite
                                           ? layer_counts.back() > layer_counts[small_r - 1]
                                           : true);
        summary["classification_consistent"] = consistent;
    }
    return Json{{"schema_version", report_schema_version},
                {"command", "growth"},
                {"system", system_json(sys)},
                {"config", Json{{"depth", cfg.depth}, {"radius", cfg.radius}}},
                {"records", std::move(records)},
                {"summary", std::move(summary)}};
}

Json cover_report(const CoxeterSystem& sys, const ExperimentConfig& cfg) {
    cfg.validate();
    const auto& spec = sys.detect_cyclic();
    const bool rank2_infinite =
        sys.rank() == 2 && sys.matrix().at(1, 2) == label_infinity;
    if (!spec && !rank2_infinite)
        throw ValidationError("coverage runs on cyclic systems (rank >= 3) or the rank-2 infinite bond");
    const Classification& cls = sys.classify();

    auto elements = all_coxeter_elements(sys);
    // Partition membership: the standard element with source k+1, sink k.
    std::map<size_t, int> partition_family;
    if (spec) {
        for (int k = 1; k <= spec->n; ++k) {
            StandardForm sf = build_standard(sys, *spec, bracket(k + 1, spec->n), k);
            for (size_t e = 0; e < elements.size(); ++e)
                if (elements[e] == sf.desc) partition_family[e] = k;
        }
    }

    Json element_list = Json::array();
    std::vector<std::optional<std::pair<int, int>>> standard_of(elements.size());
    std::vector<std::optional<StandardForm>> form_of(elements.size());
    for (size_t e = 0; e < elements.size(); ++e) {
        Json ej{{"id", element_id(e)},
                {"bits", orientation_bits(elements[e].orientation)},
                {"word", word_json(elements[e].word)}};
        if (spec) {
            standard_of[e] = has_greatest(sys, *spec, elements[e]);
            if (standard_of[e]) {
                form_of[e] = build_standard(sys, *spec, standard_of[e]->first,
                                            standard_of[e]->second);
                ej["standard"] = Json{{"source", standard_of[e]->first},
                                      {"sink", standard_of[e]->second}};
            }
        }
        if (partition_family.count(e)) ej["partition_family"] = partition_family[e];
        element_list.push_back(std::move(ej));
    }

    DepthLayers layers = enumerate_by_depth(sys, cfg.depth, cfg.root_guard);
    DepthCache depth_cache(sys);
    depth_cache.absorb(layers);
    Json records = Json::array();
    std::map<int, std::array<size_t, 3>> per_depth;  // covered, certified, unknown
    size_t covered = 0, uncovered_certified = 0, uncovered_unknown = 0;

    for (int r = 1; r <= static_cast<int>(layers.layers.size()); ++r) {
        for (const auto& beta : layers.layers[r - 1]) {
            Json verdicts;
            size_t yes = 0, no = 0, unknown = 0;
            int partition_yes = 0;
            Json yes_elements = Json::array();
            for (size_t e = 0; e < elements.size(); ++e) {
                PreprojectiveVerdict v =
                    form_of[e] ? decide_standard(sys, *form_of[e], beta, &depth_cache)
                               : decide_general(sys, elements[e], beta, cfg.mu_max, &depth_cache);
                if (v.status == VerdictStatus::yes) {
                    ++yes;
                    yes_elements.push_back(element_id(e));
                    if (partition_family.count(e)) ++partition_yes;
                    // Witness soundness: re-apply the matrix power freshly.
                    Coords img = mat_apply(element_power(sys, elements[e].element, v.witness_power),
                                           beta);
                    if (root_sign(img) != Sign::negative)
                        throw InvariantError("a yes witness failed its re-verification");
                } else if (v.status == VerdictStatus::no) {
                    ++no;
                } else {
                    ++unknown;
                }
                verdicts[element_id(e)] = verdict_json(v);
            }
            std::string status;
            if (yes > 0) {
                status = "covered";
                ++covered;
                ++per_depth[r][0];
            } else if (unknown == 0) {
                status = "uncovered_certified";
                ++uncovered_certified;
                ++per_depth[r][1];
            } else {
                status = "uncovered_unknown";
                ++uncovered_unknown;
                ++per_depth[r][2];
            }
            Json rec{{"coords", coords_json(beta)},
                     {"coords_text", coords_text(beta)},
                     {"depth", r},
                     {"status", status},
                     {"yes_count", yes},
                     {"yes_elements", std::move(yes_elements)},
                     {"verdicts", std::move(verdicts)}};
            if (spec) rec["partition_yes_count"] = partition_yes;
            records.push_back(std::move(rec));
        }
    }

    Json per_depth_json = Json::array();
    for (const auto& [r, counts] : per_depth)
        per_depth_json.push_back(Json{{"depth", r},
                                      {"covered", counts[0]},
                                      {"uncovered_certified", counts[1]},
                                      {"uncovered_unknown", counts[2]}});

    // Dichotomy cross-check: affine must cover everything; an indefinite
    // system must exhibit an uncovered root (certified when every element
    // is standard).
    bool all_standard = spec != std::nullopt;
    if (spec)
        for (size_t e = 0; e < elements.size(); ++e)
            if (!standard_of[e]) all_standard = false;
    std::string crosscheck_rule;
    bool crosscheck_ok = true;
    if (cls.kind == SystemKind::affine) {
        crosscheck_rule = "affine: every enumerated root covered";
        crosscheck_ok = uncovered_certified == 0 && uncovered_unknown == 0;
    } else if (cls.kind == SystemKind::indefinite) {
        if (all_standard) {
            crosscheck_rule = "indefinite, all elements standard: a certified uncovered root exists";
            crosscheck_ok = uncovered_certified >= 1;
        } else {
            crosscheck_rule = "indefinite: an uncovered root exists";
            crosscheck_ok = uncovered_certified + uncovered_unknown >= 1;
        }
    } else {
        crosscheck_rule = "finite systems are outside the dichotomy";
    }

    Json first_uncovered;
    for (const auto& rec : records)
        if (rec["status"] != "covered") {
            first_uncovered = Json{{"coords_text", rec["coords_text"]}, {"depth", rec["depth"]},
                                   {"status", rec["status"]}};
            break;
        }

    Json report{{"schema_version", report_schema_version},
                {"command", "cover"},
                {"system", system_json(sys)},
                {"classification", kind_name(cls.kind)},
                {"config", Json{{"depth", cfg.depth}, {"mu_max", cfg.mu_max}, {"seed", cfg.seed}}},
                {"elements", std::move(element_list)},
                {"records", std::move(records)},
                {"summary", Json{{"roots", layers.total()},
                                 {"covered", covered},
                                 {"uncovered_certified", uncovered_certified},
                                 {"uncovered_unknown", uncovered_unknown},
                                 {"witness_recheck", "ok"},
                                 {"per_depth", std::move(per_depth_json)},
                                 {"crosscheck_rule", crosscheck_rule},
                                 {"crosscheck_ok", crosscheck_ok}}}};
    if (!first_uncovered.is_null()) report["summary"]["first_uncovered"] = first_uncovered;
    if (!crosscheck_ok)
        throw TheoremContradictionError("coverage cross-check failed: " + crosscheck_rule);
    return report;
}

Json preproj_report(const CoxeterSystem& sys, const ExperimentConfig& cfg,
                    const std::string& element_selector, const std::string& root_selector) {
    cfg.validate();
    CoxeterElementDescriptor desc = parse_element_selector(sys, element_selector);
    const auto& spec = sys.detect_cyclic();
    std::optional<StandardForm> sf;
    if (spec) {
        auto st = has_greatest(sys, *spec, desc);
        if (st) sf = build_standard(sys, *spec, st->first, st->second);
    }

    Json report{{"schema_version", report_schema_version},
                {"command", "preproj"},
                {"system", system_json(sys)},
                {"config", Json{{"depth", cfg.depth}, {"mu_max", cfg.mu_max}}},
                {"element", Json{{"bits", orientation_bits(desc.orientation)},
                                 {"word", word_json(desc.word)}}}};
    if (sf)
        report["element"]["standard"] =
            Json{{"source", sf->source}, {"sink", sf->sink}};

    Json seeds = Json::array();
    for (const auto& s : seed_inversions(sys, desc)) seeds.push_back(coords_text(s));
    report["seed_inversions"] = std::move(seeds);

    if (!root_selector.empty()) {
        Coords beta = parse_root_selector(sys, root_selector);
        if (root_sign(beta) != Sign::positive)
            throw SelectorError("selected root is not positive");
        PreprojectiveVerdict v = decide_general(sys, desc, beta, cfg.mu_max);
        Json rec{{"coords", coords_json(beta)},
                 {"coords_text", coords_text(beta)},
                 {"depth", depth(sys, beta)},
                 {"verdict", verdict_json(v)}};
        if (sf) {
            std::pair<int, int> bad{0, 0};
            const bool mono = monotone_check(sys, *sf, beta, &bad);
            rec["monotone"] = mono;
            if (!mono) rec["monotone_violation"] = Json::array({bad.first, bad.second});
        }
        report["records"] = Json::array({std::move(rec)});
        return report;
    }

    PreprojectiveEnumeration e = enumerate_preprojective(sys, desc, cfg.mu_max, cfg.depth);
    Json records = Json::array();
    for (size_t mu = 0; mu < e.layers.size(); ++mu) {
        for (const auto& beta : e.layers[mu]) {
            Json rec{{"layer", mu},
                     {"coords_text", coords_text(beta)},
                     {"depth", e.index.at(key_of(beta)).second}};
            if (sf) rec["monotone"] = monotone_check(sys, *sf, beta);
            records.push_back(std::move(rec));
        }
    }
    report["records"] = std::move(records);
    report["summary"] =
        Json{{"layers", e.layers.size()},
             {"members", e.total()},
             {"stopped_by_depth_cap", e.stopped_by_depth_cap}};
    if (sf) {
        LayerBoundReport lb = layer_bound_check(sys, *spec, *sf, cfg.depth);
        Json counts = Json::array();
        for (int c : lb.counts) counts.push_back(c);
        report["summary"]["layer_bound_counts"] = std::move(counts);
        report["summary"]["layer_bound_max"] =
            *std::max_element(lb.counts.begin(), lb.counts.end());
    }
    return report;
}

Json atilde_verify_report(const CoxeterSystem& sys, const ExperimentConfig& cfg) {
    cfg.validate();
    Json checks = Json::array();
    const auto& spec = sys.detect_cyclic();
    if (sys.rank() == 2 && sys.matrix().at(1, 2) == label_infinity) {
        Atilde1Report r = atilde1_case(cfg.depth);
        checks.push_back(Json{{"check", "classified_affine"}, {"ok", r.classified_affine}});
        checks.push_back(Json{{"check", "reflection_rule"}, {"ok", r.reflection_rule_matches}});
        checks.push_back(Json{{"check", "roots_closed_form"}, {"ok", r.roots_match_closed_form}});
        checks.push_back(Json{{"check", "families_match"}, {"ok", r.families_match}});
        checks.push_back(Json{{"check", "families_cover"}, {"ok", r.families_cover}});
        return Json{{"schema_version", report_schema_version},
                    {"command", "atilde-verify"},
                    {"system", system_json(sys)},
                    {"config", Json{{"depth", cfg.depth}}},
                    {"records", std::move(checks)},
                    {"summary", Json{{"case", "rank2-infinite"}, {"roots", r.root_count}}}};
    }
    if (!spec) throw ValidationError("verification needs a cyclic system or the rank-2 infinite bond");
    for (int l : spec->labels)
        if (l != 3) throw ValidationError("closed forms exist only for the all-threes cycle");

    AtildePartitionReport r = verify_partition(sys.rank(), cfg.depth);
    checks.push_back(Json{{"check", "closed_form_matches_bfs"}, {"ok", r.closed_form_matches_bfs}});
    checks.push_back(Json{{"check", "reflection_table"}, {"ok", r.reflection_table_matches}});
    checks.push_back(Json{{"check", "families_partition"}, {"ok", r.families_partition_roots}});
    checks.push_back(
        Json{{"check", "families_match_enumerations"}, {"ok", r.families_match_enumerations}});
    Json per_depth = Json::array();
    for (int c : r.per_depth_family_max) per_depth.push_back(c);
    return Json{{"schema_version", report_schema_version},
                {"command", "atilde-verify"},
                {"system", system_json(sys)},
                {"config", Json{{"depth", cfg.depth}}},
                {"records", std::move(checks)},
                {"summary",
                 Json{{"case", "cycle"},
                      {"roots", r.root_count},
                      {"family_source_is_sink_successor", r.matched_source_is_successor},
                      {"per_depth_family_max", std::move(per_depth)}}}};
}

namespace {

std::string csv_escape(const std::string& s) {
    bool need = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string csv_cell(const Json& v) {
    if (v.is_string()) return csv_escape(v.get<std::string>());
    return csv_escape(v.dump());
}

}  // namespace

std::string render_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format != "csv") throw ValidationError("format must be json or csv");
    const Json records = report.contains("records") ? report["records"] : Json::array();
    std::set<std::string> keys;
    for (const auto& rec : records)
        for (auto it = rec.begin(); it != rec.end(); ++it) keys.insert(it.key());
    std::string out;
    bool first = true;
    for (const auto& k : keys) {
        if (!first) out += ",";
        out += csv_escape(k);
        first = false;
    }
    out += "\n";
    for (const auto& rec : records) {
        first = true;
        for (const auto& k : keys) {
            if (!first) out += ",";
            first = false;
            if (rec.contains(k)) out += csv_cell(rec[k]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace coxroots
