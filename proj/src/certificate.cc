#include <pwind/certificate.hh>

#include <iomanip>
#include <sstream>

using std::string;
using std::vector;

namespace pwind
{
    namespace
    {
        auto trimmed(const string & s) -> string
        {
            auto a = s.find_first_not_of(" \t\r");
            if (a == string::npos)
                return "";
            auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        }

        auto ints(const string & text, const string & what) -> vector<int>
        {
            std::istringstream in(text);
            vector<int> out;
            string tok;
            while (in >> tok) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used);
                }
                catch (const std::logic_error &) {
                    used = 0;
                }
                if (used != tok.size())
                    throw GraphError("bad number '" + tok + "' in " + what);
                out.push_back(v);
            }
            return out;
        }

        auto section(const std::map<string, string> & s, const string & name) -> const string &
        {
            auto it = s.find(name);
            if (it == s.end())
                throw GraphError("certificate lacks a [" + name + "] section");
            return it->second;
        }

        auto first_line(const string & text) -> string
        {
            std::istringstream in(text);
            string line;
            while (std::getline(in, line))
                if (! trimmed(line).empty() && trimmed(line)[0] != '#')
                    return trimmed(line);
            return "";
        }
    }

    auto split_sections(const string & text) -> std::map<string, string>
    {
        std::map<string, string> out;
        std::istringstream in(text);
        string line, current;
        bool open = false;
        while (std::getline(in, line)) {
            auto t = trimmed(line);
            if (! t.empty() && t.front() == '[') {
                auto close = t.find(']');
                if (close == string::npos)
                    throw GraphError("unterminated section header: " + t);
                current = t.substr(1, close - 1);
                if (out.count(current))
                    throw GraphError("repeated section [" + current + "]");
                out[current] = trimmed(t.substr(close + 1)).empty() ? "" : trimmed(t.substr(close + 1)) + "\n";
                open = true;
                continue;
            }
            if (! open) {
                if (t.empty() || t[0] == '#')
                    continue;
                throw GraphError("text before the first section: " + t);
            }
            out[current] += line + "\n";
        }
        return out;
    }

    auto model_certificate(const ModelAssignment & m) -> string
    {
        return string("[kind] ") + (m.induced ? "induced" : "minor") + "\n[pattern]\n" + serialize_graph(m.pattern)
            + "[branches]\n" + serialize_model(m);
    }

    auto parse_model_certificate(const Graph & host, const string & text) -> ModelAssignment
    {
        auto s = split_sections(text);
        auto kind = first_line(section(s, "kind"));
        if (kind != "induced" && kind != "minor")
            throw GraphError("model kind must be induced or minor");
        auto pattern = parse_graph(section(s, "pattern"));
        auto branches = parse_model_branches(section(s, "branches"), pattern.order(), host.order());
        return ModelAssignment{host, pattern, branches, kind == "induced"};
    }

    auto embedding_certificate(const Graph & pattern, const Embedding & e) -> string
    {
        return "[pattern]\n" + serialize_graph(pattern) + "[image]\n" + serialize_embedding(e);
    }

    auto parse_embedding_certificate(const string & text) -> std::pair<Graph, Embedding>
    {
        auto s = split_sections(text);
        auto pattern = parse_graph(section(s, "pattern"));
        return {pattern, parse_embedding(section(s, "image"), pattern.order())};
    }

    auto set_certificate(const string & label, const vector<int> & vs) -> string
    {
        std::ostringstream out;
        out << '[' << label << "]\n";
        for (std::size_t i = 0; i < vs.size(); ++i)
            out << (i ? " " : "") << vs[i];
        out << '\n';
        return out.str();
    }

    auto parse_set_certificate(const string & text) -> std::pair<string, vector<int>>
    {
        auto s = split_sections(text);
        if (s.size() != 1)
            throw GraphError("set certificate needs exactly one section");
        return {s.begin()->first, ints(s.begin()->second, "vertex list")};
    }

    auto bags_certificate(const PathDecomposition & d) -> string { return "[bags]\n" + serialize_bags(d); }

    auto parse_bags_certificate(const string & text, int universe) -> PathDecomposition
    {
        return parse_bags(section(split_sections(text), "bags"), universe);
    }

    auto magic_certificate(const MagicResult & r) -> string
    {
        std::ostringstream out;
        out << "[magic]\nbranch: " << r.branch << '\n';
        for (std::size_t i = 0; i < r.chosen.size(); ++i) {
            out << "chosen: " << r.chosen[i] << " z: " << r.z[i] << " family:";
            for (int j : r.families[i])
                out << ' ' << j;
            out << " w:";
            for (int w : r.w[i])
                out << ' ' << w;
            out << '\n';
        }
        return out.str();
    }

    auto parse_magic_certificate(const string & text) -> MagicResult
    {
        auto body = section(split_sections(text), "magic");
        MagicResult r;
        std::istringstream in(body);
        string line;
        bool saw_branch = false;
        while (std::getline(in, line)) {
            auto t = trimmed(line);
            if (t.empty() || t[0] == '#')
                continue;
            if (t.rfind("branch:", 0) == 0) {
                auto v = ints(t.substr(7), "branch line");
                if (v.size() != 1)
                    throw GraphError("bad branch line");
                r.branch = v[0];
                saw_branch = true;
                continue;
            }
            if (t.rfind("chosen:", 0) != 0)
                throw GraphError("unexpected magic line: " + t);
            auto zpos = t.find(" z:"), fpos = t.find(" family:"), wpos = t.find(" w:");
            if (zpos == string::npos || fpos == string::npos || wpos == string::npos || ! (zpos < fpos && fpos < wpos))
                throw GraphError("malformed chosen line: " + t);
            auto chosen = ints(t.substr(7, zpos - 7), "chosen");
            auto z = ints(t.substr(zpos + 3, fpos - zpos - 3), "z");
            if (chosen.size() != 1 || z.size() != 1)
                throw GraphError("malformed chosen line: " + t);
            r.chosen.push_back(chosen[0]);
            r.z.push_back(z[0]);
            r.families.push_back(ints(t.substr(fpos + 8, wpos - fpos - 8), "family"));
            r.w.push_back(ints(t.substr(wpos + 3), "w"));
        }
        if (! saw_branch)
            throw GraphError("magic certificate lacks a branch line");
        return r;
    }

    auto serialize_paths(const vector<Path> & paths) -> string
    {
        std::ostringstream out;
        for (auto & p : paths) {
            out << "L:";
            for (int v : p.vertices)
                out << ' ' << v;
            out << '\n';
        }
        return out.str();
    }

    auto parse_paths(const string & text, int universe) -> vector<Path>
    {
        vector<Path> out;
        std::istringstream in(text);
        string line;
        while (std::getline(in, line)) {
            auto t = trimmed(line);
            if (t.empty() || t[0] == '#')
                continue;
            if (t.rfind("L:", 0) != 0)
                throw GraphError("path lines start with 'L:': " + t);
            auto vs = ints(t.substr(2), "path");
            if (vs.empty())
                throw GraphError("empty path");
            for (int v : vs)
                if (v < 0 || v >= universe)
                    throw GraphError("path vertex out of range: " + std::to_string(v));
            out.push_back(Path{vs});
        }
        return out;
    }

    auto fnv1a64(const string & bytes) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    auto hex64(std::uint64_t v) -> string
    {
        std::ostringstream out;
        out << std::hex << std::setw(16) << std::setfill('0') << v;
        return out.str();
    }
}
