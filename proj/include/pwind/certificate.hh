#pragma once

#include <pwind/containment.hh>
#include <pwind/extraction.hh>
#include <pwind/width.hh>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pwind
{
    /// Certificates are plain text split into sections, each opened by a `[name]` line.
    auto split_sections(const std::string & text) -> std::map<std::string, std::string>;

    /// `[kind] induced|minor`, `[pattern]` graph text, `[branches]` one line per pattern vertex.
    auto model_certificate(const ModelAssignment & m) -> std::string;
    auto parse_model_certificate(const Graph & host, const std::string & text) -> ModelAssignment;

    /// `[pattern]` graph text and `[image]` one line per pattern vertex.
    auto embedding_certificate(const Graph & pattern, const Embedding & e) -> std::string;
    auto parse_embedding_certificate(const std::string & text) -> std::pair<Graph, Embedding>;

    /// A labelled vertex list, e.g. `[clique]` or `[stable]`, vertices on one line.
    auto set_certificate(const std::string & label, const std::vector<int> & vs) -> std::string;
    auto parse_set_certificate(const std::string & text) -> std::pair<std::string, std::vector<int>>;

    auto bags_certificate(const PathDecomposition & d) -> std::string;
    auto parse_bags_certificate(const std::string & text, int universe) -> PathDecomposition;

    /// `[magic]` with `branch: b` then one `chosen:` line per selected path:
    /// `chosen: i z: v family: j1 j2 .. w: u1 u2 ..`.
    auto magic_certificate(const MagicResult & r) -> std::string;
    auto parse_magic_certificate(const std::string & text) -> MagicResult;

    /// One `L: v1 v2 ..` line per path, read from x to y.
    auto serialize_paths(const std::vector<Path> & paths) -> std::string;
    auto parse_paths(const std::string & text, int universe) -> std::vector<Path>;

    auto fnv1a64(const std::string & bytes) -> std::uint64_t;
    auto hex64(std::uint64_t v) -> std::string;
}
