#include "qfhm/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qfhm {

namespace {

Json poly_terms_to_json(const PolyMap& p) {
    Json terms = Json::array();
    if (p.empty()) {
        // The zero polynomial still needs a well-formed term list.
        return terms;
    }
    for (const auto& [powers, coeff] : p) {
        Json t;
        t["re"] = coeff.real();
        t["im"] = coeff.imag();
        t["powers"] = powers;
        terms.push_back(std::move(t));
    }
    return terms;
}

bool is_constant_one(const PolyMap& p) {
    if (p.size() != 1) return false;
    const auto& [powers, coeff] = *p.begin();
    for (int e : powers)
        if (e != 0) return false;
    return coeff == Complex(1.0, 0.0);
}

HoloExpr poly_terms_from_json(const Json& j) {
    const Json* terms = &j;
    if (j.is_object() && j.contains("poly")) terms = &j.at("poly");
    if (!terms->is_array()) throw ParseError("polynomial must be an array of terms");
    HoloExpr acc = HoloExpr::constant(0.0);
    for (const auto& t : *terms) {
        if (!t.is_object() || !t.contains("re") || !t.contains("im") || !t.contains("powers"))
            throw ParseError("polynomial term must carry re, im and powers");
        if (!t.at("re").is_number() || !t.at("im").is_number() || !t.at("powers").is_array())
            throw ParseError("polynomial term fields have wrong types");
        Complex c(t.at("re").get<double>(), t.at("im").get<double>());
        HoloExpr mono = HoloExpr::constant(c);
        int var = 0;
        for (const auto& p : t.at("powers")) {
            if (!p.is_number_integer()) throw ParseError("powers must be integers");
            int e = p.get<int>();
            if (e < 0) throw ValidationError("negative power in polynomial term");
            if (e > 0) mono = mono * HoloExpr::variable(var).pow(e);
            ++var;
        }
        acc = acc + mono;
    }
    return acc;
}

}  // namespace

Json expr_to_json(const HoloExpr& e, int nvars) {
    RationalForm r = e.to_rational(nvars);
    if (is_constant_one(r.den)) {
        Json out;
        out["poly"] = poly_terms_to_json(r.num);
        return out;
    }
    Json out;
    out["ratio"] = Json{{"num", poly_terms_to_json(r.num)}, {"den", poly_terms_to_json(r.den)}};
    return out;
}

HoloExpr expr_from_json(const Json& j) {
    if (j.is_array()) return poly_terms_from_json(j);
    if (!j.is_object()) throw ParseError("expression must be an object or a term array");
    if (j.contains("poly")) return poly_terms_from_json(j.at("poly"));
    if (j.contains("ratio")) {
        const Json& r = j.at("ratio");
        if (!r.is_object() || !r.contains("num") || !r.contains("den"))
            throw ParseError("ratio needs num and den");
        HoloExpr num = poly_terms_from_json(r.at("num"));
        HoloExpr den = poly_terms_from_json(r.at("den"));
        return HoloExpr::quotient(num, den);
    }
    throw ParseError("expression needs a poly or ratio field");
}

Json holo_matrix_to_json(const HoloMatrix& m) {
    Json rows = Json::array();
    const int nv = std::max(m.nvars(), 1);
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(expr_to_json(m.at(r, c), nv));
        rows.push_back(std::move(row));
    }
    return rows;
}

HoloMatrix holo_matrix_from_json(const Json& j) {
    const Json* rows = &j;
    if (j.is_object() && j.contains("map")) rows = &j.at("map");
    if (!rows->is_array() || rows->empty()) throw ParseError("matrix must be a nonempty array of rows");
    std::vector<HoloExpr> entries;
    int cols = -1;
    int nvars = 0;
    for (const auto& row : *rows) {
        if (!row.is_array() || row.empty()) throw ParseError("matrix rows must be nonempty arrays");
        if (cols < 0) cols = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != cols) throw ParseError("matrix rows have unequal lengths");
        for (const auto& cell : row) {
            // Track the declared width of the powers vectors so constant
            // entries do not lose the variable count.
            const Json* terms = nullptr;
            if (cell.is_object() && cell.contains("poly") && cell.at("poly").is_array())
                terms = &cell.at("poly");
            else if (cell.is_array())
                terms = &cell;
            else if (cell.is_object() && cell.contains("ratio") && cell.at("ratio").is_object() &&
                     cell.at("ratio").contains("num") && cell.at("ratio").at("num").is_array())
                terms = &cell.at("ratio").at("num");
            if (terms)
                for (const auto& t : *terms)
                    if (t.is_object() && t.contains("powers") && t.at("powers").is_array())
                        nvars = std::max(nvars, static_cast<int>(t.at("powers").size()));
            entries.push_back(expr_from_json(cell));
        }
    }
    return HoloMatrix(static_cast<int>(rows->size()), cols, std::move(entries), nvars);
}

namespace {

Json domain_to_json(const Domain& d) {
    Json out;
    out["kind"] = d.kind_name();
    out["dim"] = d.dim();
    out["margin"] = d.margin();
    return out;
}

Json node_to_json(const KernelNode& n, int nvars) {
    Json out;
    switch (n.kind) {
        case KernelNode::Kind::WeightedDisk:
            out["type"] = "weighted_disk";
            out["lambda"] = n.lambda;
            return out;
        case KernelNode::Kind::Polydisk:
            out["type"] = "polydisk_product";
            out["lambdas"] = n.lambdas;
            return out;
        case KernelNode::Kind::Ball:
            out["type"] = "ball";
            out["lambda"] = n.lambda;
            return out;
        case KernelNode::Kind::Conjugate:
            out["type"] = "conjugate";
            out["psi"] = holo_matrix_to_json(*n.psi);
            out["base"] = node_to_json(*n.a, nvars);
            return out;
        case KernelNode::Kind::Sum:
        case KernelNode::Kind::Product:
        case KernelNode::Kind::DirectSum:
            out["type"] = n.kind == KernelNode::Kind::Sum       ? "sum"
                          : n.kind == KernelNode::Kind::Product ? "product"
                                                                : "direct_sum";
            out["a"] = node_to_json(*n.a, nvars);
            out["b"] = node_to_json(*n.b, nvars);
            return out;
    }
    throw ValidationError("corrupt kernel node");
}

KernelSpec node_from_json(const Json& j, const Domain& dom) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw ParseError("kernel node needs a string type field");
    const std::string type = j.at("type").get<std::string>();
    if (type == "weighted_disk") {
        if (!j.contains("lambda") || !j.at("lambda").is_number())
            throw ParseError("weighted_disk needs a numeric lambda");
        if (dom.kind() != DomainKind::Disk)
            throw ValidationError("weighted_disk kernel requires a disk domain");
        return KernelSpec::weighted_disk(j.at("lambda").get<double>(), dom.margin());
    }
    if (type == "polydisk_product") {
        if (!j.contains("lambdas") || !j.at("lambdas").is_array())
            throw ParseError("polydisk_product needs a lambdas array");
        std::vector<double> ls;
        for (const auto& l : j.at("lambdas")) {
            if (!l.is_number()) throw ParseError("lambdas must be numeric");
            ls.push_back(l.get<double>());
        }
        if (dom.kind() != DomainKind::Polydisk || static_cast<int>(ls.size()) != dom.dim())
            throw ValidationError("polydisk_product kernel requires a polydisk domain of matching dimension");
        return KernelSpec::polydisk(std::move(ls), dom.margin());
    }
    if (type == "ball") {
        if (!j.contains("lambda") || !j.at("lambda").is_number())
            throw ParseError("ball needs a numeric lambda");
        if (dom.kind() != DomainKind::Ball)
            throw ValidationError("ball kernel requires a ball domain");
        return KernelSpec::ball(dom.dim(), j.at("lambda").get<double>(), dom.margin());
    }
    if (type == "conjugate") {
        if (!j.contains("psi") || !j.contains("base")) throw ParseError("conjugate needs psi and base");
        KernelSpec base = node_from_json(j.at("base"), dom);
        HoloMatrix psi = holo_matrix_from_json(j.at("psi"));
        return KernelSpec::conjugate(base, std::move(psi));
    }
    if (type == "sum" || type == "product" || type == "direct_sum") {
        if (!j.contains("a") || !j.contains("b")) throw ParseError(type + " needs operands a and b");
        KernelSpec a = node_from_json(j.at("a"), dom);
        KernelSpec b = node_from_json(j.at("b"), dom);
        if (type == "sum") return KernelSpec::sum(a, b);
        if (type == "product") return KernelSpec::product(a, b);
        return KernelSpec::direct_sum(a, b);
    }
    throw ParseError("unknown kernel node type '" + type + "'");
}

}  // namespace

Json kernel_to_json(const KernelSpec& spec) {
    Json out;
    out["domain"] = domain_to_json(spec.domain());
    out["rank"] = spec.rank();
    out["kernel"] = node_to_json(*spec.root(), spec.domain().dim());
    return out;
}

KernelSpec kernel_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("kernel spec must be an object");
    if (!j.contains("domain") || !j.contains("rank") || !j.contains("kernel"))
        throw ParseError("kernel spec needs domain, rank and kernel fields");
    const Json& dj = j.at("domain");
    if (!dj.is_object() || !dj.contains("kind") || !dj.at("kind").is_string() ||
        !dj.contains("dim") || !dj.at("dim").is_number_integer())
        throw ParseError("domain needs a string kind and integer dim");
    const std::string kind = dj.at("kind").get<std::string>();
    double margin = 0.05;
    if (dj.contains("margin")) {
        if (!dj.at("margin").is_number()) throw ParseError("domain margin must be numeric");
        margin = dj.at("margin").get<double>();
    }
    int dim = dj.at("dim").get<int>();
    Domain dom = kind == "disk"       ? Domain::disk(margin)
                 : kind == "polydisk" ? Domain::polydisk(dim, margin)
                 : kind == "ball"     ? Domain::ball(dim, margin)
                                      : throw ParseError("unknown domain kind '" + kind + "'");
    if (dom.dim() != dim) throw ValidationError("domain dim inconsistent with kind");
    if (!j.at("rank").is_number_integer()) throw ParseError("rank must be an integer");
    KernelSpec spec = node_from_json(j.at("kernel"), dom);
    const int declared = j.at("rank").get<int>();
    if (declared != spec.rank())
        throw ValidationError("declared rank " + std::to_string(declared) +
                              " does not match constructed rank " + std::to_string(spec.rank()));
    return spec;
}

KernelSpec load_kernel_file(const std::string& path) { return kernel_from_json(load_json_file(path)); }

HoloMatrix load_matrix_file(const std::string& path) {
    return holo_matrix_from_json(load_json_file(path));
}

Json point_to_json(const ComplexPoint& z) {
    Json out = Json::array();
    for (int v = 0; v < z.dim(); ++v)
        out.push_back(Json{{"re", z[v].real()}, {"im", z[v].imag()}});
    return out;
}

Json cmat_to_json(const CMat& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(Json{{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
        rows.push_back(std::move(row));
    }
    return rows;
}

Json local_data_to_json(const LocalData& d) {
    Json out;
    out["z"] = point_to_json(d.z);
    out["grammian_a"] = cmat_to_json(d.grammian_a);
    out["grammian_b"] = cmat_to_json(d.grammian_b);
    out["basis_change"] = cmat_to_json(d.basis_change);
    out["modulus_sq"] = cmat_to_json(d.modulus_sq);
    out["modulus"] = cmat_to_json(d.modulus);
    out["co_modulus"] = cmat_to_json(d.co_modulus);
    return out;
}

Json verdict_to_json(const EquivalenceVerdict& v, Json meta) {
    Json out;
    out["verdict"] = verdict_name(v.verdict);
    out["max_residual"] = v.max_residual;
    out["witness"] = v.witness ? point_to_json(*v.witness) : Json(nullptr);
    out["witness_residual"] = v.witness_residual;
    out["grid_size"] = v.grid_size;
    out["tolerance"] = v.tolerance;
    out["meta"] = std::move(meta);
    return out;
}

std::string fnv1a_hex(const std::string& text) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return std::string(buf);
}

std::string spec_hash(const KernelSpec& spec) { return fnv1a_hex(kernel_to_json(spec).dump()); }

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return std::string(buf);
}

Metadata scheme_metadata(const FDScheme& scheme) {
    Metadata m;
    m.add("scheme", "h=" + format_sci(scheme.h) + " richardson=" + (scheme.richardson ? "1" : "0"));
    return m;
}

void write_csv_file(const std::string& path, const Metadata& meta,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (const auto& [k, v] : meta.kv) out << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ",";
        out << header[i];
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << row[i];
        }
        out << "\n";
    }
    save_text_file(path, out.str());
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << content;
    if (!out) throw ValidationError("write to '" + path + "' failed");
}

}  // namespace qfhm
