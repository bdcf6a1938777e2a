#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qfhm/curvature.hpp"
#include "qfhm/equivalence.hpp"
#include "qfhm/holo.hpp"
#include "qfhm/kernels.hpp"
#include "qfhm/localization.hpp"
#include "qfhm/types.hpp"

namespace qfhm {

using Json = nlohmann::ordered_json;

// Expressions travel as sparse polynomials or ratios of polynomials:
//   {"poly":  [{"re":1.0,"im":0.0,"powers":[2,0]}, ...]}
//   {"ratio": {"num":[...], "den":[...]}}
// with one powers entry per variable.
Json expr_to_json(const HoloExpr& e, int nvars);
HoloExpr expr_from_json(const Json& j);

// Matrices are row-major nested arrays of expressions.
Json holo_matrix_to_json(const HoloMatrix& m);
HoloMatrix holo_matrix_from_json(const Json& j);

Json kernel_to_json(const KernelSpec& spec);
KernelSpec kernel_from_json(const Json& j);

KernelSpec load_kernel_file(const std::string& path);
HoloMatrix load_matrix_file(const std::string& path);

Json point_to_json(const ComplexPoint& z);
Json cmat_to_json(const CMat& m);
Json local_data_to_json(const LocalData& d);
Json verdict_to_json(const EquivalenceVerdict& v, Json meta);

// 16 hex digit FNV-1a fingerprint of the canonical serialized form; lets
// output files identify their inputs without embedding whole specs.
std::string spec_hash(const KernelSpec& spec);
std::string fnv1a_hex(const std::string& text);

// All floating point output in text files goes through this fixed format.
std::string format_sci(double v);

struct Metadata {
    std::vector<std::pair<std::string, std::string>> kv;
    void add(std::string key, std::string value) { kv.emplace_back(std::move(key), std::move(value)); }
};

Metadata scheme_metadata(const FDScheme& scheme);

// "# key: value" header block, then a comma separated header line and rows.
void write_csv_file(const std::string& path, const Metadata& meta,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

Json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

}  // namespace qfhm
