#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hodgelink/complex.hpp"
#include "hodgelink/metrics.hpp"
#include "hodgelink/partition.hpp"
#include "hodgelink/types.hpp"

namespace hodgelink::io {

/// Simplex-list text: one simplex per line, whitespace-separated node ids,
/// '#' starts a comment.
std::vector<std::vector<std::int64_t>> read_simplex_list(const std::string& path);
/// Canonical dump in original ids: isolated nodes, then links, then triangles.
void write_simplex_list(const std::string& path, const SimplicialComplex& x);

/// Coordinate text format: one-line header "nrows ncols nnz", then
/// "row col value" lines.
void write_coordinate_matrix(const std::string& path, const SpMatI& m);
void write_coordinate_matrix(const std::string& path, const SpMatD& m);
SpMatD read_coordinate_matrix(const std::string& path);

/// Dense id -> original id map.
void write_node_map(const std::string& path, const SimplicialComplex& x);

/// Partition CSV "link_lo,link_hi,community" (original ids) plus a JSON
/// sidecar carrying the optimization metadata.
void write_partition_csv(const std::string& path, const SimplicialComplex& x,
                         const Partition& p);
Partition read_partition_csv(const std::string& path, const SimplicialComplex& x);
void write_partition_json(const std::string& path, const Partition& p);

/// Metadata CSV with header "node_id,similarity_attr,overlap_attr"; empty
/// fields mean the attribute is missing for that node.
NodeMetadata read_metadata_csv(const std::string& path);
void write_metadata_csv(const std::string& path, const NodeMetadata& meta);

void write_metrics_csv(const std::string& path, const std::vector<MetricsReport>& reports,
                       const std::vector<double>& q_hat);
std::vector<MetricsReport> read_metrics_csv(const std::string& path);
void write_composite_csv(const std::string& path, const std::vector<CompositeRow>& rows);
/// Plot-ready long format: metric,t,method,value.
void write_long_csv(const std::string& path, const std::vector<MetricsReport>& reports);

/// key=value configuration text; '#' comments, later keys win.
std::map<std::string, std::string> read_config(const std::string& path);

std::string format_double(double v);

} // namespace hodgelink::io
