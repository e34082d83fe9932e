#include "chm/io.hpp"

#include <cmath>

namespace chm::io {

const char* kind_name(FileKind k) {
    switch (k) {
        case FileKind::Butson: return "butson";
        case FileKind::Complex: return "complex";
        case FileKind::SignatureButson: return "signature-butson";
        case FileKind::SignatureComplex: return "signature-complex";
        case FileKind::Design: return "design";
    }
    return "?";
}

json to_json(const ExactMatrix& m, bool signature_kind) {
    json exp = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) {
            if (m.zero_at(i, j))
                row.push_back(nullptr);
            else
                row.push_back(m.exp_at(i, j));
        }
        exp.push_back(std::move(row));
    }
    return {{"kind", signature_kind ? "signature-butson" : "butson"},
            {"q", m.order()},
            {"n", m.n()},
            {"exp", std::move(exp)}};
}

json to_json(const ComplexMatrix& m, bool signature_kind) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (int j = 0; j < m.n(); ++j) {
            rrow.push_back(m.at(i, j).real());
            irow.push_back(m.at(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return {{"kind", signature_kind ? "signature-complex" : "complex"},
            {"n", m.n()},
            {"re", std::move(re)},
            {"im", std::move(im)}};
}

json to_json(const chm::Design& d) {
    json rows = json::array();
    for (int i = 0; i < d.v(); ++i) {
        std::string row(static_cast<std::size_t>(d.v()), '0');
        for (int j = 0; j < d.v(); ++j)
            if (d.at(i, j)) row[static_cast<std::size_t>(j)] = '1';
        rows.push_back(std::move(row));
    }
    return {{"kind", "design"}, {"v", d.v()}, {"rows", std::move(rows)}};
}

json to_json(const MatrixVariant& m, bool signature_kind) {
    if (variant_exact(m)) return to_json(std::get<ExactMatrix>(m), signature_kind);
    return to_json(std::get<ComplexMatrix>(m), signature_kind);
}

json to_json(const AnalysisMatrix& v) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < v.n(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (int j = 0; j < v.k(); ++j) {
            rrow.push_back(v.at(i, j).real());
            irow.push_back(v.at(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return {{"kind", "analysis"}, {"n", v.n()}, {"k", v.k()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

namespace {

int require_dim(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("missing or non-integer '") + field + "' field");
    const std::int64_t n = j[field].get<std::int64_t>();
    if (n < 1 || n > 4096) throw ParseError(std::string("'") + field + "' out of range");
    return static_cast<int>(n);
}

ExactMatrix parse_exact(const json& j, bool signature_kind) {
    const int n = require_dim(j, "n");
    const int q = require_dim(j, "q");
    if (!j.contains("exp") || !j["exp"].is_array() || j["exp"].size() != static_cast<std::size_t>(n))
        throw ParseError("'exp' must be an n x n array");
    ExactMatrix m(n, q);
    for (int i = 0; i < n; ++i) {
        const json& row = j["exp"][static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ParseError("'exp' must be an n x n array");
        for (int c = 0; c < n; ++c) {
            const json& cell = row[static_cast<std::size_t>(c)];
            if (cell.is_null()) continue;  // entry stays Zero
            if (!cell.is_number_integer()) throw ParseError("exponents must be integers or null");
            const std::int64_t e = cell.get<std::int64_t>();
            if (e < 0 || e >= q) throw ParseError("exponent out of range [0, q)");
            m.set_exp(i, c, e);
        }
    }
    if (signature_kind) {
        for (int i = 0; i < n; ++i) {
            if (!m.zero_at(i, i)) throw ParseError("signature kinds need a null diagonal");
            for (int c = 0; c < n; ++c)
                if (i != c && m.zero_at(i, c))
                    throw ParseError("signature kinds need unimodular off-diagonal entries");
        }
    }
    return m;
}

ComplexMatrix parse_complex(const json& j, bool signature_kind) {
    const int n = require_dim(j, "n");
    for (const char* field : {"re", "im"})
        if (!j.contains(field) || !j[field].is_array() || j[field].size() != static_cast<std::size_t>(n))
            throw ParseError(std::string("'") + field + "' must be an n x n array");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const json& rrow = j["re"][static_cast<std::size_t>(i)];
        const json& irow = j["im"][static_cast<std::size_t>(i)];
        if (!rrow.is_array() || rrow.size() != static_cast<std::size_t>(n) || !irow.is_array() ||
            irow.size() != static_cast<std::size_t>(n))
            throw ParseError("'re'/'im' must be n x n arrays");
        for (int c = 0; c < n; ++c) {
            const json& re = rrow[static_cast<std::size_t>(c)];
            const json& im = irow[static_cast<std::size_t>(c)];
            if (!re.is_number() || !im.is_number()) throw ParseError("matrix entries must be numbers");
            m.at(i, c) = {re.get<double>(), im.get<double>()};
            if (!std::isfinite(m.at(i, c).real()) || !std::isfinite(m.at(i, c).imag()))
                throw ParseError("matrix entries must be finite");
        }
    }
    if (signature_kind) {
        for (int i = 0; i < n; ++i) {
            if (std::abs(m.at(i, i)) > kUnimodularTol)
                throw ParseError("signature kinds need a zero diagonal");
            for (int c = 0; c < n; ++c)
                if (i != c && std::abs(std::abs(m.at(i, c)) - 1.0) > 1e-10)
                    throw ParseError("signature kinds need unimodular off-diagonal entries");
        }
    }
    return m;
}

DesignGrid parse_design(const json& j) {
    const int v = require_dim(j, "v");
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != static_cast<std::size_t>(v))
        throw ParseError("'rows' must be v strings of 0/1 characters");
    DesignGrid grid(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v), 0));
    for (int i = 0; i < v; ++i) {
        const json& row = j["rows"][static_cast<std::size_t>(i)];
        if (!row.is_string()) throw ParseError("'rows' must be strings");
        const std::string s = row.get<std::string>();
        if (static_cast<int>(s.size()) != v) throw ParseError("design rows must have length v");
        for (int c = 0; c < v; ++c) {
            if (s[static_cast<std::size_t>(c)] != '0' && s[static_cast<std::size_t>(c)] != '1')
                throw ParseError("design rows must contain only 0 and 1");
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                s[static_cast<std::size_t>(c)] - '0';
        }
    }
    return grid;
}

}  // namespace

MatrixFile parse_matrix_file(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("matrix file must be an object with a 'kind' string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "butson") return {FileKind::Butson, parse_exact(j, false)};
    if (kind == "signature-butson") return {FileKind::SignatureButson, parse_exact(j, true)};
    if (kind == "complex") return {FileKind::Complex, parse_complex(j, false)};
    if (kind == "signature-complex") return {FileKind::SignatureComplex, parse_complex(j, true)};
    if (kind == "design") return {FileKind::Design, parse_design(j)};
    throw ParseError("unknown kind '" + kind + "'");
}

MatrixFile parse_matrix_file(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return parse_matrix_file(j);
}

json report_to_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    return {{"mode", mode_name(rep.mode)},
            {"tolerance", rep.tolerance},
            {"checks", std::move(checks)},
            {"pass", rep.pass}};
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return {buf};
}

}  // namespace chm::io
