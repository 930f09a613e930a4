#pragma once

#include <optional>
#include <string>

#include <dedekind/order.hpp>

namespace dedekind::cli {

/* Ring file: {"rank": n, "one": [ints], "table": [[[ints]]]} with
 * table[i][j][k] = c_{i+1,j+1,k+1}. Integers may be JSON numbers or
 * decimal strings. */
OrderPresentation load_order(const std::string& path);

struct IdealFile {
    TwoGenIdeal ideal;
    std::optional<Int> h;
};

/* Ideal file: {"alpha": [ints], "beta": [ints], "h": "decimal"?}. */
IdealFile load_ideal(const std::string& path, std::size_t rank);

std::string read_file(const std::string& path);

}  // namespace dedekind::cli
