#ifndef COXROOTS_IO_HPP
#define COXROOTS_IO_HPP

#include <json.hpp>

#include "coxroots/atilde.hpp"

namespace coxroots {

// Default nlohmann::json keeps keys sorted, which the byte-identical
// report contract relies on.
using Json = nlohmann::json;

inline constexpr const char* report_schema_version = "1";

// Input document: {"rank": n, "matrix": [[...]]} or {"rank": n,
// "cyclic": [m_1, ..., m_n]}, infinite bonds spelled "inf".
CoxeterMatrix parse_system_document(const std::string& text);
// Canonical matrix-form document; parsing it back yields the same matrix.
std::string emit_system_document(const CoxeterMatrix& m);

struct ExperimentConfig {
    int depth = 20;
    int mu_max = 50;
    int radius = 10;
    std::string format = "json";
    unsigned long seed = 0;
    // Desk-scale guards; exceeding one raises ResourceError (exit code 3).
    int radius_guard = 12;
    size_t root_guard = 2000000;
    size_t element_guard = 500000;

    void validate() const;
};

Json algebraic_json(const AlgebraicReal& a);
Json coords_json(const Coords& v);

// Selectors used by the preproj command.
// element: "standard:i,k" (cycle positions), "bits:<01 string over edges>",
//          or "word:l1,l2,...".
// root:    "alpha:i" or "coords:x1,x2,..." where each x is "p/q" or a
//          coefficient tuple "(c0;c1;...)".
CoxeterElementDescriptor parse_element_selector(const CoxeterSystem& sys, const std::string& sel);
Coords parse_root_selector(const CoxeterSystem& sys, const std::string& sel);

Json classify_report(const CoxeterSystem& sys);
Json growth_report(const CoxeterSystem& sys, const ExperimentConfig& cfg);
Json cover_report(const CoxeterSystem& sys, const ExperimentConfig& cfg);
Json preproj_report(const CoxeterSystem& sys, const ExperimentConfig& cfg,
                    const std::string& element_selector, const std::string& root_selector);
Json atilde_verify_report(const CoxeterSystem& sys, const ExperimentConfig& cfg);

// "json": indented dump. "csv": one row per entry of report["records"],
// header from the union of record keys, nested values inlined as JSON.
std::string render_report(const Json& report, const std::string& format);

}  // namespace coxroots

#endif
