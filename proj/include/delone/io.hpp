#pragma once

// Text formats.
//
//   point sets   "# group=Z d=2" | "# group=H3 d=3", then one element per line: "x1 x2 ..."
//   box unions   "# group=R d=2", then one half-open box per line: "lo1 hi1 lo2 hi2 ..."
//   Z[φ] points  "# group=Zphi d=1", then one point m + nφ per line: "m n"
//
// Coordinates are integers or exact rationals "p/q"; blank lines and further '#' lines are ignored.
// Writers emit the canonical order, so write ∘ read is the identity on canonical sets.

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "delone/quadratic.hpp"
#include "delone/set_algebra.hpp"

namespace delone {

struct FileHeader {
    std::string kind;  // "Z", "H3", "R" or "Zphi"
    int dim = 0;
};

namespace detail {

inline FileHeader parse_header(const std::string& line) {
    std::istringstream in(line);
    std::string hash, group, dim;
    in >> hash >> group >> dim;
    if (hash != "#" || group.rfind("group=", 0) != 0 || dim.rfind("d=", 0) != 0)
        throw Error(ErrorCode::Parse, "expected header '# group=<kind> d=<dim>', got '" + line + "'");
    FileHeader h;
    h.kind = group.substr(6);
    try {
        h.dim = std::stoi(dim.substr(2));
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad dimension in header '" + line + "'");
    }
    if (h.dim < 1) throw Error(ErrorCode::Parse, "dimension must be >= 1");
    return h;
}

/// Reads the header and the remaining data lines as token lists.
inline std::pair<FileHeader, std::vector<std::vector<std::string>>> read_rows(std::istream& in) {
    std::string line;
    std::optional<FileHeader> header;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!header) {
            header = parse_header(line);
            continue;
        }
        if (line[line.find_first_not_of(" \t")] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        rows.push_back(std::move(toks));
    }
    if (!header) throw Error(ErrorCode::Parse, "missing header line");
    return {*header, std::move(rows)};
}

inline std::int64_t parse_integer(const std::string& tok) {
    const Rational r = parse_rational(tok);
    if (r.get_den() != 1) throw Error(ErrorCode::Parse, "expected an integer coordinate, got '" + tok + "'");
    return to_int64(r.get_num());
}

}  // namespace detail

inline GroupCtx ctx_from_header(const FileHeader& h) {
    if (h.kind == "Z") return GroupCtx::integer_lattice(h.dim);
    if (h.kind == "H3") {
        if (h.dim != 3) throw Error(ErrorCode::Parse, "H3 files must declare d=3");
        return GroupCtx::heisenberg();
    }
    if (h.kind == "R") return GroupCtx::real_boxes(h.dim);
    throw Error(ErrorCode::Parse, "unknown group kind '" + h.kind + "'");
}

inline void write_gset(std::ostream& out, const GroupCtx& ctx, const GSet& a) {
    detail::require_set(ctx, a);
    out << "# group=" << ctx.file_kind() << " d=" << ctx.dim() << "\n";
    if (a.discrete()) {
        a.points().for_each([&](const IntElem& g) {
            for (int i = 0; i < g.arity(); ++i) out << (i ? " " : "") << g[i];
            out << "\n";
        });
        return;
    }
    for (const auto& b : a.boxes().boxes()) {
        for (int i = 0; i < b.dim(); ++i) out << (i ? " " : "") << b.lo[static_cast<std::size_t>(i)] << " " << b.hi[static_cast<std::size_t>(i)];
        out << "\n";
    }
}

inline std::pair<GroupCtx, GSet> read_gset(std::istream& in) {
    auto [header, rows] = detail::read_rows(in);
    if (header.kind == "Zphi") throw Error(ErrorCode::Parse, "Z[phi] point files are read with read_phi_points");
    const GroupCtx ctx = ctx_from_header(header);
    const auto d = static_cast<std::size_t>(ctx.dim());
    if (ctx.discrete()) {
        std::vector<IntElem> elems;
        for (const auto& row : rows) {
            if (row.size() != d) throw Error(ErrorCode::Parse, "expected " + std::to_string(d) + " coordinates per line");
            IntElem g(ctx.dim());
            for (std::size_t i = 0; i < d; ++i) g[static_cast<int>(i)] = detail::parse_integer(row[i]);
            elems.push_back(g);
        }
        return {ctx, GSet(PointSet::from_elements(ctx.dim(), elems))};
    }
    std::vector<Box> boxes;
    for (const auto& row : rows) {
        if (row.size() != 2 * d) throw Error(ErrorCode::Parse, "expected " + std::to_string(2 * d) + " endpoints per box");
        Box b;
        for (std::size_t i = 0; i < d; ++i) {
            b.lo.push_back(parse_rational(row[2 * i]));
            b.hi.push_back(parse_rational(row[2 * i + 1]));
        }
        boxes.push_back(std::move(b));
    }
    return {ctx, GSet(BoxSet::from_boxes(ctx.dim(), std::move(boxes)))};
}

inline void write_phi_points(std::ostream& out, const std::vector<ZPhi>& pts) {
    out << "# group=Zphi d=1\n";
    for (const auto& p : pts) out << p.a() << " " << p.b() << "\n";
}

inline std::vector<ZPhi> read_phi_points(std::istream& in) {
    auto [header, rows] = detail::read_rows(in);
    if (header.kind != "Zphi" || header.dim != 1) throw Error(ErrorCode::Parse, "expected '# group=Zphi d=1'");
    std::vector<ZPhi> pts;
    for (const auto& row : rows) {
        if (row.size() != 2) throw Error(ErrorCode::Parse, "expected 'm n' per line");
        pts.emplace_back(detail::parse_integer(row[0]), detail::parse_integer(row[1]));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace delone
