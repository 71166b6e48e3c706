#pragma once

// File formats. All numbers are written with std::to_chars (17
// significant digits, locale-independent) so files round-trip exactly
// and are byte-identical across reruns.
//
//   dataset:  '# key=value' comments (nbar, eta, seed, count),
//             header 'x', one quadrature value per row.
//   cf:       '# N=...' comment, header 'b,re,im,sigma2'.
//   profile:  '# key=value' comments, header 'alpha,p,sigma,significance'.

#include <complex>
#include <filesystem>
#include <map>
#include <string>

#include "nqp/charfunc.hpp"
#include "nqp/quasiprob.hpp"
#include "nqp/spats.hpp"

namespace nqp {

/// Shortest-exact decimal form of x (17 significant digits).
std::string format_double(double x);

/// Strict parse of a full string as a double; throws data_error.
double parse_double(const std::string& text);

void write_dataset_csv(const std::filesystem::path& path, const QuadratureDataset& data);
QuadratureDataset read_dataset_csv(const std::filesystem::path& path);

void write_cf_csv(const std::filesystem::path& path, const RadialCfEstimate& estimate,
                  const std::map<std::string, std::string>& extra = {});
RadialCfEstimate read_cf_csv(const std::filesystem::path& path);

/// `extra` comment keys are written after the standard ones.
void write_profile_csv(const std::filesystem::path& path, const QuasiprobProfile& profile,
                       const std::map<std::string, std::string>& extra = {});
QuasiprobProfile read_profile_csv(const std::filesystem::path& path);

/// Filter table export: header 's,omega1'.
void write_filter_table_csv(const std::filesystem::path& path,
                            const NonclassicalityFilter& filter);

}  // namespace nqp
