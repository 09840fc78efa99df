#include "dmcv/network_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "dmcv/errors.hpp"

namespace dmcv {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_integer(std::string_view tok, std::size_t line, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                                   std::string(tok) + "'");
    return v;
}

double to_probability(std::string_view tok, std::size_t line) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
        throw ParseError(line, "expected probability, got '" + std::string(tok) + "'");
    if (v < 0.0 || v > 1.0) throw ParseError(line, "probability outside [0,1]");
    return v;
}

struct ArcLine {
    Arc arc;
    std::size_t line;
};

struct ProbLine {
    double p;
    std::size_t line;
};

} // namespace

NetworkDocument parse_network(std::string_view text) {
    std::optional<long long> nodes;
    std::optional<long long> arc_total;
    std::size_t arcs_line = 0;
    std::map<ArcId, ArcLine> arcs;
    std::map<ArcId, std::map<int, ProbLine>> probs;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = tokenize(line);
        if (tok.empty()) continue;

        const std::string_view kw = tok[0];
        if (kw == "nodes") {
            if (tok.size() != 2) throw ParseError(lineno, "usage: nodes <n>");
            if (nodes) throw ParseError(lineno, "duplicate 'nodes' line");
            nodes = to_integer(tok[1], lineno, "node count");
            if (*nodes < 2) throw ParseError(lineno, "node count must be at least 2");
        } else if (kw == "arcs") {
            if (tok.size() != 2) throw ParseError(lineno, "usage: arcs <m>");
            if (arc_total) throw ParseError(lineno, "duplicate 'arcs' line");
            arc_total = to_integer(tok[1], lineno, "arc count");
            if (*arc_total < 0) throw ParseError(lineno, "arc count must be non-negative");
            arcs_line = lineno;
        } else if (kw == "arc") {
            if (tok.size() != 5) throw ParseError(lineno, "usage: arc <id> <tail> <head> <capacity>");
            if (!nodes) throw ParseError(lineno, "'arc' before 'nodes'");
            const long long id = to_integer(tok[1], lineno, "arc id");
            const long long tail = to_integer(tok[2], lineno, "tail");
            const long long head = to_integer(tok[3], lineno, "head");
            const long long cap = to_integer(tok[4], lineno, "capacity");
            if (id < 1 || id > 1'000'000) throw ParseError(lineno, "arc id out of range");
            if (tail < 1 || tail > *nodes || head < 1 || head > *nodes)
                throw ParseError(lineno, "arc endpoint out of range 1.." + std::to_string(*nodes));
            if (tail == head) throw ParseError(lineno, "self-loop on node " + std::to_string(tail));
            if (cap < 0) throw ParseError(lineno, "negative capacity");
            if (cap > 1'000'000) throw ParseError(lineno, "capacity too large");
            Arc a{static_cast<ArcId>(id), static_cast<NodeId>(tail), static_cast<NodeId>(head),
                  static_cast<int>(cap)};
            if (!arcs.emplace(a.id, ArcLine{a, lineno}).second)
                throw ParseError(lineno, "duplicate arc id " + std::to_string(id));
        } else if (kw == "prob") {
            if (tok.size() != 4) throw ParseError(lineno, "usage: prob <arc-id> <state> <probability>");
            const long long id = to_integer(tok[1], lineno, "arc id");
            const long long state = to_integer(tok[2], lineno, "state");
            const double p = to_probability(tok[3], lineno);
            if (state < 0) throw ParseError(lineno, "negative state");
            if (id < 1 || id > 1'000'000) throw ParseError(lineno, "arc id out of range");
            auto& row = probs[static_cast<ArcId>(id)];
            if (!row.emplace(static_cast<int>(state), ProbLine{p, lineno}).second)
                throw ParseError(lineno, "duplicate probability for arc " + std::to_string(id) +
                                             " state " + std::to_string(state));
        } else {
            throw ParseError(lineno, "unknown directive '" + std::string(kw) + "'");
        }
    }

    if (!nodes) throw ParseError(lineno, "missing 'nodes' line");
    if (!arc_total) throw ParseError(lineno, "missing 'arcs' line");
    if (static_cast<long long>(arcs.size()) != *arc_total)
        throw ParseError(arcs_line, "declared " + std::to_string(*arc_total) + " arcs, found " +
                                        std::to_string(arcs.size()));
    std::vector<Arc> list;
    list.reserve(arcs.size());
    ArcId expect = 1;
    for (const auto& [id, al] : arcs) {
        if (id != expect)
            throw ParseError(al.line, "arc ids must be 1..m without gaps (missing " +
                                          std::to_string(expect) + ")");
        list.push_back(al.arc);
        ++expect;
    }

    Network net(static_cast<int>(*nodes), std::move(list));
    if (probs.empty()) return {std::move(net), std::nullopt};

    std::vector<std::vector<double>> pmf(static_cast<std::size_t>(net.arc_count()));
    for (const auto& [id, row] : probs) {
        const std::size_t first_line = row.begin()->second.line;
        if (!net.valid_arc(id)) throw ParseError(first_line, "prob for unknown arc " + std::to_string(id));
        const Arc& a = net.arc(id);
        auto& out = pmf[static_cast<std::size_t>(id - 1)];
        out.assign(static_cast<std::size_t>(a.capacity) + 1, 0.0);
        double sum = 0.0;
        for (const auto& [state, pl] : row) {
            if (state > a.capacity)
                throw ParseError(pl.line, "state " + std::to_string(state) + " exceeds capacity " +
                                              std::to_string(a.capacity) + " of arc " +
                                              std::to_string(id));
            out[static_cast<std::size_t>(state)] = pl.p;
            sum += pl.p;
        }
        if (std::abs(sum - 1.0) > StateDistribution::kSumTolerance) {
            std::ostringstream msg;
            msg.precision(12);
            msg << "probabilities of arc " << id << " sum to " << sum << ", expected 1";
            throw ParseError(first_line, msg.str());
        }
    }
    for (const Arc& a : net.arcs()) {
        if (!probs.count(a.id))
            throw ParseError(lineno, "arc " + std::to_string(a.id) + " has no probability lines");
    }
    StateDistribution dist(net, std::move(pmf));
    return {std::move(net), std::move(dist)};
}

NetworkDocument load_network(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error("cannot read '" + path.string() + "'");
    try {
        return parse_network(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.detail());
    }
}

std::string serialize_network(const Network& net, const StateDistribution* dist) {
    std::string out;
    out += "nodes " + std::to_string(net.node_count()) + "\n";
    out += "arcs " + std::to_string(net.arc_count()) + "\n";
    for (const Arc& a : net.arcs()) {
        out += "arc " + std::to_string(a.id) + " " + std::to_string(a.tail) + " " +
               std::to_string(a.head) + " " + std::to_string(a.capacity) + "\n";
    }
    if (dist == nullptr) return out;
    char buf[64];
    for (const Arc& a : net.arcs()) {
        auto pmf = dist->pmf(a.id);
        for (int s = static_cast<int>(pmf.size()) - 1; s >= 0; --s) {
            const double p = pmf[static_cast<std::size_t>(s)];
            if (p == 0.0) continue;
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
            (void)ec;
            out += "prob " + std::to_string(a.id) + " " + std::to_string(s) + " " +
                   std::string(buf, ptr) + "\n";
        }
    }
    return out;
}

} // namespace dmcv
