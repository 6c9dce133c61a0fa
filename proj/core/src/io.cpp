#include "gsup/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gsup {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const std::string& src, int line, const std::string& msg) {
    throw ParseError(src + ":" + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& src, int line, const std::string& tok) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(src, line, "expected an integer, got '" + tok + "'");
    }
}

// split "key: a b c" style token lists at the token ending with ':'
std::pair<std::vector<std::string>, std::vector<std::string>>
split_at_colon(const Line& line, const std::string& src) {
    std::vector<std::string> head, tail;
    bool after = false;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        std::string t = line.tokens[i];
        if (!after && !t.empty() && t.back() == ':') {
            t.pop_back();
            if (!t.empty()) head.push_back(t);
            after = true;
            continue;
        }
        (after ? tail : head).push_back(std::move(t));
    }
    if (!after) fail(src, line.number, "missing ':' separator");
    return {head, tail};
}

} // namespace

GraphSystem load_system(std::istream& in, const std::string& src) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(src + ": empty input");

    bool have_version = false;
    std::optional<GridSpec> grid;
    std::vector<std::string> vertex_order;
    std::map<std::string, std::vector<std::string>> rotations;
    std::map<std::string, Color> colors_by_name;
    std::map<std::string, std::map<std::string, std::vector<std::string>>> families; // H/K
    std::vector<Region> regions_h, regions_k;

    for (const Line& line : lines) {
        const std::string& key = line.tokens[0];
        if (key == "version") {
            if (line.tokens.size() != 2 || line.tokens[1] != "1")
                fail(src, line.number, "unsupported format version");
            have_version = true;
        } else if (key == "vertices") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                vertex_order.push_back(line.tokens[i]);
        } else if (key == "rotation") {
            auto [head, tail] = split_at_colon(line, src);
            if (head.size() != 1) fail(src, line.number, "rotation needs one vertex name");
            if (!rotations.emplace(head[0], tail).second)
                fail(src, line.number, "duplicate rotation for " + head[0]);
        } else if (key == "colors") {
            auto [head, tail] = split_at_colon(line, src);
            if (head.size() != 1 || (head[0] != "red" && head[0] != "blue"))
                fail(src, line.number, "colors needs 'red:' or 'blue:'");
            Color c = head[0] == "red" ? Color::red : Color::blue;
            for (const auto& v : tail) colors_by_name[v] = c;
        } else if (key == "family") {
            auto [head, tail] = split_at_colon(line, src);
            if (head.size() != 2 || (head[0] != "H" && head[0] != "K"))
                fail(src, line.number, "family needs 'H name:' or 'K name:'");
            if (!families[head[0]].emplace(head[1], tail).second)
                fail(src, line.number, "duplicate family " + head[1]);
        } else if (key == "grid") {
            if (line.tokens.size() != 4) fail(src, line.number, "grid needs rows cols topology");
            GridSpec gs;
            gs.rows = parse_int(src, line.number, line.tokens[1]);
            gs.cols = parse_int(src, line.number, line.tokens[2]);
            if (line.tokens[3] == "plane") gs.topology = GridTopology::plane;
            else if (line.tokens[3] == "torus") gs.topology = GridTopology::torus;
            else fail(src, line.number, "topology must be plane or torus");
            grid = gs;
        } else if (key == "region") {
            auto [head, tail] = split_at_colon(line, src);
            if (head.size() != 2 || (head[0] != "H" && head[0] != "K"))
                fail(src, line.number, "region needs 'H name:' or 'K name:'");
            if (tail.empty() || tail.size() % 2 != 0)
                fail(src, line.number, "region cells must be row col pairs");
            Region reg;
            reg.name = head[1];
            for (std::size_t i = 0; i < tail.size(); i += 2)
                reg.cells.insert({parse_int(src, line.number, tail[i]),
                                  parse_int(src, line.number, tail[i + 1])});
            (head[0] == "H" ? regions_h : regions_k).push_back(std::move(reg));
        } else {
            fail(src, line.number, "unknown directive '" + key + "'");
        }
    }
    if (!have_version) throw ParseError(src + ": missing 'version 1'");

    GraphSystem sys;
    std::map<std::string, VertexId> id_of;

    if (grid) {
        if (!vertex_order.empty() || !rotations.empty())
            throw ParseError(src + ": grid shorthand cannot be mixed with explicit vertices");
        try {
            BuiltSystem built = build_system(*grid, regions_h, regions_k);
            sys = std::move(built.system);
        } catch (const StructuralError& e) {
            throw ParseError(src + ": " + e.what());
        }
        for (const auto& [v, name] : sys.vertex_names) id_of[name] = v;
    } else {
        if (!regions_h.empty() || !regions_k.empty())
            throw ParseError(src + ": regions need a grid line");
        if (vertex_order.empty()) throw ParseError(src + ": no vertices declared");
        std::map<VertexId, std::vector<VertexId>> table;
        for (const auto& name : vertex_order) {
            if (id_of.count(name)) throw ParseError(src + ": duplicate vertex " + name);
            VertexId v = static_cast<VertexId>(id_of.size());
            id_of[name] = v;
            sys.vertex_names[v] = name;
        }
        for (const auto& name : vertex_order) {
            auto it = rotations.find(name);
            if (it == rotations.end()) throw ParseError(src + ": missing rotation for " + name);
            std::vector<VertexId> nbrs;
            for (const auto& n : it->second) {
                auto f = id_of.find(n);
                if (f == id_of.end())
                    throw ParseError(src + ": rotation of " + name + " mentions unknown vertex " +
                                     n);
                nbrs.push_back(f->second);
            }
            table[id_of.at(name)] = std::move(nbrs);
        }
        for (const auto& [name, _] : rotations)
            if (!id_of.count(name)) throw ParseError(src + ": rotation for unknown vertex " + name);
        try {
            sys.host = from_rotation_table(table);
        } catch (const StructuralError& e) {
            throw ParseError(src + ": " + e.what());
        }
        for (const auto& [kind, fams] : families) {
            for (const auto& [fname, verts] : fams) {
                std::set<VertexId> members;
                for (const auto& n : verts) {
                    auto f = id_of.find(n);
                    if (f == id_of.end())
                        throw ParseError(src + ": family " + fname + " mentions unknown vertex " +
                                         n);
                    members.insert(f->second);
                }
                (kind == "H" ? sys.H : sys.K)[fname] = std::move(members);
            }
        }
    }

    if (!colors_by_name.empty()) {
        for (const auto& [name, c] : colors_by_name) {
            auto f = id_of.find(name);
            if (f == id_of.end()) throw ParseError(src + ": color for unknown vertex " + name);
            sys.coloring[f->second] = c;
        }
        for (const auto& [name, v] : id_of)
            if (!sys.coloring.count(v)) sys.coloring[v] = Color::blue;
    }

    try {
        sys.validate();
    } catch (const StructuralError& e) {
        throw ParseError(src + ": " + e.what());
    }
    return sys;
}

GraphSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return load_system(in, path);
}

std::string save_system(const GraphSystem& sys) {
    std::ostringstream out;
    out << "version 1\n";
    std::vector<std::string> names;
    for (VertexId v : sys.host.vertices()) names.push_back(sys.name_of(v));
    std::sort(names.begin(), names.end());
    std::map<std::string, VertexId> id_of;
    for (VertexId v : sys.host.vertices()) id_of[sys.name_of(v)] = v;

    out << "vertices";
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
    for (const auto& n : names) {
        out << "rotation " << n << ":";
        for (DartId d : sys.host.rotation(id_of.at(n)))
            out << ' ' << sys.name_of(sys.host.dart_head(d));
        out << '\n';
    }
    if (sys.has_coloring()) {
        std::vector<std::string> red;
        for (const auto& n : names)
            if (sys.coloring.at(id_of.at(n)) == Color::red) red.push_back(n);
        if (!red.empty()) {
            out << "colors red:";
            for (const auto& n : red) out << ' ' << n;
            out << '\n';
        }
        out << "colors blue:";
        for (const auto& n : names)
            if (sys.coloring.at(id_of.at(n)) == Color::blue) out << ' ' << n;
        out << '\n';
    }
    auto dump = [&](const char* kind, const std::map<std::string, std::set<VertexId>>& fam) {
        for (const auto& [fname, members] : fam) {
            out << "family " << kind << ' ' << fname << ':';
            std::vector<std::string> mn;
            for (VertexId v : members) mn.push_back(sys.name_of(v));
            std::sort(mn.begin(), mn.end());
            for (const auto& n : mn) out << ' ' << n;
            out << '\n';
        }
    };
    dump("H", sys.H);
    dump("K", sys.K);
    return out.str();
}

std::string to_dot(const EmbeddedGraph& g, const std::map<VertexId, std::string>& names,
                   const std::string& graph_name) {
    auto label = [&](VertexId v) {
        auto it = names.find(v);
        return it == names.end() ? std::to_string(v) : it->second;
    };
    std::ostringstream out;
    out << "graph " << graph_name << " {\n";
    for (VertexId v : g.vertices()) out << "  \"" << label(v) << "\";\n";
    for (auto [d, t] : g.edges())
        out << "  \"" << label(g.dart_vertex(d)) << "\" -- \"" << label(g.dart_vertex(t))
            << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace gsup
