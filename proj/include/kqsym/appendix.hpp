#pragma once

// Published change-of-basis tables for k = 2, 3 and n = 2, 3, 4, with their
// printed label orders. Used as golden data by the test suites and by
// `kqsym verify --suite appendix`.

#include "kqsym/composition.hpp"

#include <string>
#include <vector>

namespace kqsym {

struct PublishedTable {
    int k;
    int n;
    std::string kind; // "ns-to-h" or "qs-to-m"
    std::vector<Composition> labels;
    std::vector<std::vector<int>> rows;
};

inline const std::vector<PublishedTable>& published_tables() {
    using C = Composition;
    static const std::vector<PublishedTable> tables = {
        {2, 2, "ns-to-h", {C{2}, C{1, 1}}, {{1, 0}, {-1, 1}}},
        {2, 3, "ns-to-h", {C{2, 1}, C{1, 2}, C{1, 1, 1}}, {{1, 0, 0}, {0, 1, 0}, {0, -1, 1}}},
        {2, 4, "ns-to-h", {C{2, 2}, C{2, 1, 1}, C{1, 2, 1}, C{1, 1, 2}, C{1, 1, 1, 1}},
         {{1, 0, 0, 0, 0}, {-1, 1, 0, 0, 0}, {-1, 0, 1, 0, 0}, {-1, 0, 0, 1, 0}, {1, -1, 0, -1, 1}}},
        {3, 2, "ns-to-h", {C{2}, C{1, 1}}, {{1, 0}, {-1, 1}}},
        {3, 3, "ns-to-h", {C{3}, C{2, 1}, C{1, 2}, C{1, 1, 1}},
         {{1, 0, 0, 0}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {1, -1, -1, 1}}},
        {3, 4, "ns-to-h", {C{3, 1}, C{1, 3}, C{2, 2}, C{2, 1, 1}, C{1, 2, 1}, C{1, 1, 2}, C{1, 1, 1, 1}},
         {{1, 0, 0, 0, 0, 0, 0},
          {0, 1, 0, 0, 0, 0, 0},
          {0, -1, 1, 0, 0, 0, 0},
          {0, 0, -1, 1, 0, 0, 0},
          {0, 0, -1, 0, 1, 0, 0},
          {0, 0, -1, 0, 0, 1, 0},
          {0, 1, 0, 0, -1, -1, 1}}},
        {2, 2, "qs-to-m", {C{2}, C{1, 1}}, {{1, 1}, {0, 1}}},
        {2, 3, "qs-to-m", {C{2, 1}, C{1, 2}, C{1, 1, 1}}, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}},
        {2, 4, "qs-to-m", {C{2, 2}, C{2, 1, 1}, C{1, 2, 1}, C{1, 1, 2}, C{1, 1, 1, 1}},
         {{1, 1, 1, 1, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}}},
        {3, 2, "qs-to-m", {C{2}, C{1, 1}}, {{1, 1}, {0, 1}}},
        {3, 3, "qs-to-m", {C{3}, C{2, 1}, C{1, 2}, C{1, 1, 1}},
         {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}},
        {3, 4, "qs-to-m", {C{3, 1}, C{1, 3}, C{2, 2}, C{2, 1, 1}, C{1, 2, 1}, C{1, 1, 2}, C{1, 1, 1, 1}},
         {{1, 0, 0, 0, 0, 0, 0},
          {0, 1, 1, 1, 1, 1, 1},
          {0, 0, 1, 1, 1, 1, 2},
          {0, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 1},
          {0, 0, 0, 0, 0, 1, 1},
          {0, 0, 0, 0, 0, 0, 1}}},
    };
    return tables;
}

} // namespace kqsym
