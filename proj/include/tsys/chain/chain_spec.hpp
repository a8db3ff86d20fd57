#ifndef TSYS_CHAIN_CHAIN_SPEC_HPP
#define TSYS_CHAIN_CHAIN_SPEC_HPP

#include <stdexcept>
#include <string>

namespace tsys::chain {

enum class Topology { periodic, open };

// Chain geometry and boundary parameters. alpha, beta enter the open
// Hamiltonian as 1/alpha, 1/beta and must be nonzero there; xi controls the
// off-diagonal part of the left boundary (xi = 0 keeps a U(1) symmetry).
struct ChainSpec {
    int sites = 1;
    Topology topology = Topology::periodic;
    double alpha = 1.0;
    double beta = 1.0;
    double xi = 0.0;

    void validate() const {
        if (sites < 1) throw std::invalid_argument("ChainSpec: sites must be >= 1");
        if (topology == Topology::open) {
            if (alpha == 0.0) throw std::invalid_argument("ChainSpec: alpha must be nonzero");
            if (beta == 0.0) throw std::invalid_argument("ChainSpec: beta must be nonzero");
        }
    }

    bool open() const { return topology == Topology::open; }
    std::string topology_name() const { return open() ? "open" : "periodic"; }
};

}  // namespace tsys::chain

#endif
