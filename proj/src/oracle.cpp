#include "corona/oracle.hpp"

namespace corona {

int dim_oracle(const Graph& g, const OracleConfig& config) {
    return independence_number(g, config.max_mis_vertices).size;
}

bool is_cm_oracle(const Graph& g, const OracleConfig& config) {
    return betti_table(g, config).depth() == dim_oracle(g, config);
}

}  // namespace corona
