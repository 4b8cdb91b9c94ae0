/**
 * Machine- and human-readable renderings of the computation results. Every
 * command has a JSON form (the contract format), a text form, and a CSV
 * form carrying the same numbers. All output is deterministic.
 */

#pragma once

#include <string>
#include <vector>

#include "toric/cech.hpp"
#include "toric/cells.hpp"
#include "toric/fan_io.hpp"
#include "toric/spectral.hpp"

namespace toric {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);

Json json_of_integer(const Integer& x);
Json json_of_group(const FgAbGroup& g);

struct Rendered {
    Json json;
    std::string text;
    std::string csv;

    std::string in(OutputFormat f) const;
};

Rendered render_validation(const Fan& fan, const FanValidation& report);
Rendered render_cech(const Fan& fan, const ChainComplex& cpx,
                     const std::vector<FgAbGroup>& homology, bool augmentation_ok);
Rendered render_flags(const SimplicialComplex& k, const std::vector<FgAbGroup>& homology);
Rendered render_e1(const E1Page& page);
Rendered render_e2(const E2Page& e2);
Rendered render_morphic(const std::vector<std::vector<long long>>& table, int qmax);
Rendered render_betti(const std::vector<long long>& betti, long long euler);
Rendered render_oracle(const OracleReport& report);

}  // namespace toric
