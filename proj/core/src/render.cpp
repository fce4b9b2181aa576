#include "degen/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace degen {

namespace {

const char* kBold = "\x1b[1;36m";
const char* kGreen = "\x1b[32m";
const char* kRed = "\x1b[1;31m";
const char* kYellow = "\x1b[33m";
const char* kReset = "\x1b[0m";

std::string rjust(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

std::string grid(const std::map<PQ, std::string>& cells, const RenderOptions& opt) {
    if (cells.empty()) return "(empty)\n";
    int pmin = cells.begin()->first.first, pmax = pmin, qmin = cells.begin()->first.second, qmax = qmin;
    std::size_t w = 1;
    for (const auto& [pq, s] : cells) {
        pmin = std::min(pmin, pq.first);
        pmax = std::max(pmax, pq.first);
        qmin = std::min(qmin, pq.second);
        qmax = std::max(qmax, pq.second);
        w = std::max(w, s.size());
    }
    for (int p = pmin; p <= pmax; ++p) w = std::max(w, std::to_string(p).size());
    std::size_t lw = 1;
    for (int q = qmin; q <= qmax; ++q) lw = std::max(lw, std::to_string(q).size());

    std::ostringstream out;
    out << rjust("q", lw) << "\n";
    for (int q = qmax; q >= qmin; --q) {
        out << rjust(std::to_string(q), lw) << " |";
        for (int p = pmin; p <= pmax; ++p) {
            auto it = cells.find({p, q});
            out << ' ';
            if (it == cells.end()) {
                out << rjust(".", w);
            } else if (opt.color) {
                out << kBold << rjust(it->second, w) << kReset;
            } else {
                out << rjust(it->second, w);
            }
        }
        out << "\n";
    }
    const std::size_t ncols = static_cast<std::size_t>(pmax - pmin + 1);
    out << std::string(lw, ' ') << " +" << std::string((w + 1) * ncols, '-') << "\n";
    out << std::string(lw, ' ') << "  ";
    for (int p = pmin; p <= pmax; ++p) out << ' ' << rjust(std::to_string(p), w);
    out << "  p\n";
    return out.str();
}

std::string eigen_label(int order, int exponent) {
    if (order == 1) return "1";
    return "z" + std::to_string(order) + "^" + std::to_string(exponent);
}

}  // namespace

std::string render_diagram(const Diagram& d, const RenderOptions& opt) {
    std::map<PQ, std::string> cells;
    for (const auto& [pq, m] : d.entries()) cells[pq] = std::to_string(m);
    return grid(cells, opt);
}

std::string render_lmhs(const LmhsSpec& s, const RenderOptions& opt) {
    // (p,q) -> eigenvalue label -> count
    std::map<PQ, std::map<std::pair<int, int>, long>> per;
    for (const auto& n : s.strings)
        for (int i = 0; i < n.length; ++i) per[{n.top.first - i, n.top.second - i}][{n.order, n.exponent}] += n.mult;
    std::map<PQ, std::string> cells;
    for (const auto& [pq, eig] : per) {
        long total = 0;
        bool nontrivial = false;
        for (const auto& [key, c] : eig) {
            total += c;
            nontrivial = nontrivial || key.first != 1;
        }
        std::string text = std::to_string(total);
        if (nontrivial) {
            text += "{";
            bool first = true;
            for (const auto& [key, c] : eig) {
                if (!first) text += ",";
                first = false;
                text += eigen_label(key.first, key.second);
                if (c != total) text += ":" + std::to_string(c);
            }
            text += "}";
        }
        cells[pq] = text;
    }
    std::string out = grid(cells, opt);
    for (const auto& n : s.strings) {
        if (n.length < 2) continue;
        std::string line = "N:";
        for (int i = 0; i < n.length; ++i) line += (i ? " -> " : " ") + pq_string({n.top.first - i, n.top.second - i});
        if (n.order != 1) line += " [" + eigen_label(n.order, n.exponent) + "]";
        if (n.mult != 1) line += " x" + std::to_string(n.mult);
        out += line + "\n";
    }
    return out;
}

std::string render_report(const Report& r, const RenderOptions& opt) {
    std::ostringstream out;
    for (const auto& c : r.checks()) {
        if (opt.failures_only && c.verdict != Verdict::fail) continue;
        const char* tag = c.verdict == Verdict::pass ? "PASS" : c.verdict == Verdict::fail ? "FAIL" : "SKIP";
        const char* col = c.verdict == Verdict::pass ? kGreen : c.verdict == Verdict::fail ? kRed : kYellow;
        if (opt.color)
            out << col << tag << kReset;
        else
            out << tag;
        out << "  " << c.id;
        if (!c.location.empty()) out << " [" << c.location << "]";
        if (!c.witness.empty()) out << "  " << c.witness;
        out << "\n";
    }
    out << r.count(Verdict::pass) << " pass, " << r.count(Verdict::fail) << " fail, " << r.count(Verdict::skipped)
        << " skipped\n";
    return out.str();
}

}  // namespace degen
