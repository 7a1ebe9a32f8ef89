#include "uval/emit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "uval/error.hpp"

namespace uval {

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::kPlain;
    if (name == "json") return Format::kJson;
    if (name == "latex") return Format::kLatex;
    if (name == "csv") return Format::kCsv;
    throw std::invalid_argument("unknown format '" + name + "'");
}

nlohmann::json to_json(const Rational& r) { return r.to_string(); }

nlohmann::json to_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& e : m.row(r)) row.push_back(e.to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const AlgebraId& id) {
    return {{"family", id.family == Family::kUnitary ? "U" : "SO"}, {"n", id.n}};
}

nlohmann::json to_json(const TensorElement& t) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [deg, m] : t.blocks()) {
        nlohmann::json rb = nlohmann::json::array();
        nlohmann::json cb = nlohmann::json::array();
        for (const auto& b : t.left().basis(deg.first)) rb.push_back(b.to_string());
        for (const auto& b : t.right().basis(deg.second)) cb.push_back(b.to_string());
        blocks.push_back({{"bidegree", {deg.first, deg.second}}, {"row_basis", rb}, {"col_basis", cb},
                          {"matrix", to_json(m)}});
    }
    return {{"left", to_json(t.left().id())}, {"right", to_json(t.right().id())}, {"blocks", blocks}};
}

nlohmann::json to_json(const CompanionData& c) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : c.a) a.push_back(x.to_string());
    return {{"n", c.n}, {"k", c.k}, {"a", a}};
}

nlohmann::json to_json(const std::vector<PositivityRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json minors = nlohmann::json::array();
        for (const auto& m : r.minors) minors.push_back(m.to_string());
        out.push_back({{"n", r.n}, {"k", r.k}, {"dim", r.dim}, {"positive_definite", r.positive_definite},
                       {"leading_minors", minors}});
    }
    return out;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json j = {{"name", e.name},   {"identity", e.anchor},  {"range", e.range},
                            {"cases", e.cases}, {"passed", e.passed}};
        if (!e.passed) j["counterexample"] = e.counterexample;
        entries.push_back(std::move(j));
    }
    return {{"n_max", report.n_max},
            {"entries", entries},
            {"totals", {{"passed", report.passed()}, {"failed", report.failed()}}}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DimensionMismatch("matrix JSON must be an array of rows");
    std::vector<Vector> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw DimensionMismatch("matrix JSON row must be an array");
        Vector v;
        for (const auto& e : row) v.push_back(Rational::parse(e.get<std::string>()));
        rows.push_back(std::move(v));
    }
    return ExactMatrix::from_rows(rows);
}

std::string to_latex(const ExactMatrix& m) {
    std::string out = "\\begin{bmatrix}\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "  ";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " & " : "") + m(r, c).to_latex();
        out += r + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    return out + "\\end{bmatrix}";
}

std::string to_latex(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::string out = "\\begin{aligned}\n";
    bool first_line = true;
    for (const auto& [deg, m] : t.blocks()) {
        const auto& lb = t.left().basis(deg.first);
        const auto& rb = t.right().basis(deg.second);
        std::string line;
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b) {
                const Rational& c = m(a, b);
                if (c.is_zero()) continue;
                const bool neg = c.sign() < 0;
                const Rational mag = neg ? -c : c;
                if (line.empty() && first_line)
                    line += neg ? "-" : "";
                else
                    line += neg ? " - " : " + ";
                if (mag != Rational(1)) line += mag.to_latex() + "\\,";
                line += lb[a].to_latex() + " \\otimes " + rb[b].to_latex();
            }
        out += "  &" + line + " \\\\\n";
        first_line = false;
    }
    return out + "\\end{aligned}";
}

std::string to_plain(const ExactMatrix& m) {
    std::size_t width = 1;
    for (const auto& e : m.entries()) width = std::max(width, e.to_string().size());
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string s = m(r, c).to_string();
            os << (c ? "  " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

std::string to_plain(const TensorElement& t) {
    std::ostringstream os;
    os << t.left().id().to_string() << " (x) " << t.right().id().to_string() << '\n';
    if (t.is_zero()) os << "0\n";
    for (const auto& [deg, m] : t.blocks()) {
        os << "block (" << deg.first << ", " << deg.second << ") rows [";
        const auto& lb = t.left().basis(deg.first);
        const auto& rb = t.right().basis(deg.second);
        for (std::size_t i = 0; i < lb.size(); ++i) os << (i ? ", " : "") << lb[i].to_string();
        os << "] cols [";
        for (std::size_t i = 0; i < rb.size(); ++i) os << (i ? ", " : "") << rb[i].to_string();
        os << "]\n" << to_plain(m);
    }
    return os.str();
}

std::string to_plain(const SuiteReport& report) {
    std::ostringstream os;
    for (const auto& e : report.entries) {
        os << (e.passed ? "PASS " : "FAIL ") << e.name << "  [" << e.range << ", " << e.cases << " cases]  "
           << e.anchor << '\n';
        if (!e.passed) os << "     counterexample: " << e.counterexample << '\n';
    }
    os << "passed " << report.passed() << ", failed " << report.failed() << " (n_max = " << report.n_max << ")\n";
    return os.str();
}

std::string to_plain(const std::vector<PositivityRow>& rows) {
    std::ostringstream os;
    os << "  n   k  dim  positive_definite\n";
    for (const auto& r : rows) {
        std::string n = std::to_string(r.n), k = std::to_string(r.k), d = std::to_string(r.dim);
        os << std::string(3 - std::min<std::size_t>(3, n.size()), ' ') << n << std::string(4 - std::min<std::size_t>(4, k.size()), ' ')
           << k << std::string(5 - std::min<std::size_t>(5, d.size()), ' ') << d << "  "
           << (r.positive_definite ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string to_csv(const std::vector<PositivityRow>& rows) {
    std::ostringstream os;
    os << "n,k,dim,positive_definite\n";
    for (const auto& r : rows) os << r.n << ',' << r.k << ',' << r.dim << ',' << (r.positive_definite ? "true" : "false") << '\n';
    return os.str();
}

std::string format_basis(const std::vector<Monomial>& basis, Format format) {
    if (format == Format::kJson) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& m : basis) j.push_back(m.to_string());
        return j.dump();
    }
    std::string out;
    for (const auto& m : basis) out += (out.empty() ? "" : ", ") + (format == Format::kLatex ? m.to_latex() : m.to_string());
    return out;
}

std::string format_poly(const GradedPoly& p, Format format) {
    switch (format) {
        case Format::kJson: return nlohmann::json(p.to_string()).dump();
        case Format::kLatex: return p.to_latex();
        default: return p.to_string();
    }
}

std::string format_matrix(const ExactMatrix& m, Format format) {
    switch (format) {
        case Format::kJson: return to_json(m).dump();
        case Format::kLatex: return to_latex(m);
        default: return to_plain(m);
    }
}

std::string format_tensor(const TensorElement& t, Format format) {
    switch (format) {
        case Format::kJson: return to_json(t).dump();
        case Format::kLatex: return to_latex(t);
        default: return to_plain(t);
    }
}

}  // namespace uval
