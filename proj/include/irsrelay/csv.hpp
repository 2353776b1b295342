// SPDX-License-Identifier: Apache-2.0
//
// Sweep CSV format. Lines starting with '#' carry metadata; the first
// non-comment line is the header below, in this exact column order. Reals
// are printed with 17 significant digits so that reading a file back
// reproduces every value bit for bit. Monte-Carlo columns are left empty
// for analytic-only rows; quantizer resolutions print as an integer or
// "inf".

#pragma once

#include "irsrelay/experiments.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace irsrelay {

inline constexpr const char* kCsvHeader =
    "n,m,k1,k2,snr_npl_db,snr_pl_db,snr_apl_db,loss_pl_db,loss_apl_db,rate_npl,rate_pl,rate_apl,"
    "mc_loss_db,mc_stderr,trials,seed,mc_snr_ratio_loss_db";

struct CsvDocument {
    std::vector<std::string> metadata; ///< comment lines without the leading "# "
    std::vector<SweepRow> rows;
};

class CsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_real(double v);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, const std::vector<std::string>& metadata = {});

CsvDocument read_csv(std::istream& in);

} // namespace irsrelay
