#include "mrgrc/serde.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mrgrc/errors.hpp"

#ifdef _WIN32
#include <process.h>
#else
#include <unistd.h>
#endif

namespace mrgrc {

using nlohmann::json;

std::string matrix_to_hex(const SymbolMatrix& m, const Field& f) {
  static const char* digits = "0123456789abcdef";
  int width = f.width() / 4;
  std::string out;
  out.reserve(size_t(m.rows()) * m.cols() * width);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      uint32_t v = m.at(r, c);
      for (int d = width - 1; d >= 0; --d) out += digits[(v >> (4 * d)) & 0xF];
    }
  }
  return out;
}

SymbolMatrix matrix_from_hex(const std::string& hex, int rows, int cols, const Field& f) {
  int width = f.width() / 4;
  if (hex.size() != size_t(rows) * cols * width)
    throw Error(Errc::BadInput, "hex matrix length " + std::to_string(hex.size()) +
                                    " does not match " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
  auto nibble = [&](char ch) -> uint32_t {
    if (ch >= '0' && ch <= '9') return uint32_t(ch - '0');
    if (ch >= 'a' && ch <= 'f') return uint32_t(ch - 'a' + 10);
    if (ch >= 'A' && ch <= 'F') return uint32_t(ch - 'A' + 10);
    throw Error(Errc::BadInput, std::string("bad hex digit '") + ch + "'");
  };
  SymbolMatrix m(rows, cols);
  size_t pos = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      uint32_t v = 0;
      for (int d = 0; d < width; ++d) v = (v << 4) | nibble(hex[pos++]);
      if (v >= f.order()) throw Error(Errc::BadInput, "symbol exceeds field order");
      m.set(r, c, v);
    }
  }
  return m;
}

json trace_to_json(const FailureTrace& t, const std::vector<int>& collectors) {
  json events = json::array();
  for (const auto& e : t.events)
    events.push_back({{"cluster", e.cluster},
                      {"failed", e.failed},
                      {"helpers", e.helpers},
                      {"locals", e.locals}});
  json j{{"events", events}};
  if (!collectors.empty()) j["collectors"] = collectors;
  return j;
}

static std::vector<int> int_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(Errc::BadInput, std::string("trace event missing list '") + key + "'");
  return j[key].get<std::vector<int>>();
}

TraceFile trace_from_json(const json& j) {
  TraceFile out;
  const json* events = nullptr;
  if (j.is_array()) {
    events = &j;  // bare list of events is accepted too
  } else if (j.is_object() && j.contains("events")) {
    events = &j["events"];
    if (j.contains("collectors")) out.collectors = j["collectors"].get<std::vector<int>>();
  } else {
    throw Error(Errc::BadInput, "trace JSON must be a list of events or {events: [...]}");
  }
  for (const auto& ev : *events) {
    RepairEvent e;
    if (!ev.contains("cluster") || !ev["cluster"].is_number_integer())
      throw Error(Errc::BadInput, "trace event missing integer 'cluster'");
    e.cluster = ev["cluster"].get<int>();
    e.failed = int_list(ev, "failed");
    e.helpers = int_list(ev, "helpers");
    e.locals = ev.contains("locals") ? int_list(ev, "locals") : std::vector<int>{};
    out.trace.events.push_back(std::move(e));
  }
  return out;
}

TraceFile load_trace_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(Errc::BadInput, path + ": " + e.what());
  }
  return trace_from_json(j);
}

void save_trace_file(const std::string& path, const FailureTrace& t,
                     const std::vector<int>& collectors) {
  atomic_write(path, trace_to_json(t, collectors).dump(2) + "\n");
}

json code_to_json(const LinearMrgrc& c) {
  json nodes = json::array();
  for (int i = 0; i < c.params.n; ++i) {
    json row = json::array();
    for (int j = 0; j < c.params.m; ++j) row.push_back(matrix_to_hex(c.nodes[i][j], *c.field));
    nodes.push_back(row);
  }
  json oracle{{"type", c.desc.type}};
  if (c.desc.type != "external") {
    oracle["t"] = c.desc.lift_t;
    oracle["beta_prime"] = c.desc.beta_prime;
  }
  if (c.desc.table) {
    json tables = json::object();
    for (const auto& [key, responses] : c.desc.table->entries) {
      json rs = json::array();
      for (const auto& r : responses)
        rs.push_back({{"helper", r.helper},
                      {"rows", r.comb.rows()},
                      {"comb", matrix_to_hex(r.comb, *c.field)}});
      tables[key] = rs;
    }
    oracle["tables"] = tables;
  }
  return json{{"params",
               {{"n", c.params.n},
                {"k", c.params.k},
                {"d", c.params.d},
                {"m", c.params.m},
                {"ell", c.params.ell},
                {"t", c.params.t}}},
              {"profile", {{"alpha", c.alpha}, {"beta", c.beta}}},
              {"field", c.field->name()},
              {"B", c.B},
              {"nodes", nodes},
              {"oracle", oracle}};
}

LinearMrgrc code_from_json(const json& j) {
  try {
    const json& pj = j.at("params");
    SystemParams p = validate(pj.at("n").get<int>(), pj.at("k").get<int>(), pj.at("d").get<int>(),
                              pj.at("m").get<int>(), pj.at("ell").get<int>(),
                              pj.at("t").get<int>());
    const Field& f = Field::by_name(j.at("field").get<std::string>());
    long long alpha = j.at("profile").at("alpha").get<long long>();
    long long beta = j.at("profile").at("beta").get<long long>();
    long long B = j.at("B").get<long long>();
    if (alpha < 1 || beta < 1 || B < 1)
      throw Error(Errc::BadInput, "alpha, beta and B must be positive integers");

    const json& oracle = j.at("oracle");
    std::string type = oracle.at("type").get<std::string>();

    LinearMrgrc c;
    if (type == "stacked-mbr" || type == "lifted-stacked-mbr") {
      if (type == "stacked-mbr" && p.t != 1)
        throw Error(Errc::BadInput, "stacked-mbr oracle requires t = 1");
      LinearMrgrc base = stacked_mbr_base(p.n, p.k, p.d, p.m, f);
      c = type == "stacked-mbr" ? base : lift(base, p.t);
      if (c.alpha != alpha || c.beta != beta || c.B != B)
        throw Error(Errc::BadInput, "profile/B in file do not match the " + type +
                                        " construction for these parameters");
    } else if (type == "external" || type == "lifted-external") {
      auto table = std::make_shared<OracleTable>();
      long long base_beta = type == "external" ? beta : oracle.at("beta_prime").get<long long>();
      for (const auto& [key, rs] : oracle.at("tables").items()) {
        std::vector<HelperResponse> responses;
        for (const auto& r : rs) {
          int rows_n = r.at("rows").get<int>();
          responses.push_back(HelperResponse{
              r.at("helper").get<int>(),
              matrix_from_hex(r.at("comb").get<std::string>(), rows_n,
                              p.m * static_cast<int>(alpha), f)});
        }
        table->entries[key] = std::move(responses);
      }
      SystemParams base_params =
          type == "external" ? p : validate(p.n, p.k, p.d, p.m, p.ell, /*t=*/1);
      LinearMrgrc base;
      base.params = base_params;
      base.alpha = alpha;
      base.beta = base_beta;
      base.B = B;
      base.field = &f;
      base.desc = OracleDescriptor{"external", 1, base_beta, table};
      std::shared_ptr<OracleTable> tbl = table;
      base.oracle = [tbl](const RepairEvent& e) {
        auto it = tbl->entries.find(query_key(e));
        if (it == tbl->entries.end())
          throw Error(Errc::BadInput, "oracle table has no entry for " + query_key(e));
        return it->second;
      };
      base.nodes.assign(p.n, std::vector<SymbolMatrix>(p.m));
      c = type == "external" ? base : lift(base, p.t);
    } else {
      throw Error(Errc::BadInput, "unknown oracle type '" + type + "'");
    }

    c.params = p;
    c.alpha = alpha;
    c.beta = beta;
    c.B = B;
    const json& nodes = j.at("nodes");
    if (nodes.size() != size_t(p.n)) throw Error(Errc::BadInput, "nodes: expected n clusters");
    for (int i = 0; i < p.n; ++i) {
      if (nodes[i].size() != size_t(p.m))
        throw Error(Errc::BadInput, "nodes: expected m nodes per cluster");
      for (int jj = 0; jj < p.m; ++jj)
        c.nodes[i][jj] = matrix_from_hex(nodes[i][jj].get<std::string>(),
                                         static_cast<int>(alpha), static_cast<int>(B), f);
    }
    return c;
  } catch (const json::exception& e) {
    throw Error(Errc::BadInput, std::string("code JSON: ") + e.what());
  }
}

LinearMrgrc load_code_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(Errc::BadInput, path + ": " + e.what());
  }
  return code_from_json(j);
}

void save_code_file(const std::string& path, const LinearMrgrc& c) {
  atomic_write(path, code_to_json(c).dump(2) + "\n");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::BadInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::BadInput, "cannot open " + tmp + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(Errc::BadInput, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(Errc::BadInput, "rename to " + path + " failed");
  }
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

}  // namespace mrgrc
