#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mrgrc/exactrep.hpp"
#include "mrgrc/trace.hpp"

namespace mrgrc {

// ---- hex-encoded matrices ---------------------------------------------------
// Row-major, each symbol as a fixed-width lowercase hex group (w/4 digits).
std::string matrix_to_hex(const SymbolMatrix& m, const Field& f);
SymbolMatrix matrix_from_hex(const std::string& hex, int rows, int cols, const Field& f);

// ---- failure traces ---------------------------------------------------------
// File layout: {"events": [{"cluster","failed","helpers","locals"}...],
//               "collectors": [..]}  (collectors optional)
struct TraceFile {
  FailureTrace trace;
  std::vector<int> collectors;
};

nlohmann::json trace_to_json(const FailureTrace& t, const std::vector<int>& collectors);
TraceFile trace_from_json(const nlohmann::json& j);
TraceFile load_trace_file(const std::string& path);
void save_trace_file(const std::string& path, const FailureTrace& t,
                     const std::vector<int>& collectors);

// ---- codes ------------------------------------------------------------------
// {"params":{n,k,d,m,ell,t}, "profile":{alpha,beta}, "field", "B",
//  "nodes":[[hex,...],...], "oracle":{type,...}}
nlohmann::json code_to_json(const LinearMrgrc& c);
LinearMrgrc code_from_json(const nlohmann::json& j);
LinearMrgrc load_code_file(const std::string& path);
void save_code_file(const std::string& path, const LinearMrgrc& c);

// ---- files ------------------------------------------------------------------
// Write to <path>.tmp.<pid> then rename, so readers never see partial files.
void atomic_write(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Comma-separated, "\n" line endings, header mandatory.
std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace mrgrc
