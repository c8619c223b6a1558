#include "hodgelink/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hodgelink::io {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot read " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw DataError("cannot write " + path);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_csv(std::string line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

std::int64_t parse_int(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size())
            throw DataError(where + ": trailing characters in number: " + s);
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw DataError(where + ": not an integer: " + s);
    }
}

double parse_real(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            throw DataError(where + ": trailing characters in number: " + s);
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw DataError(where + ": not a number: " + s);
    }
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::vector<std::int64_t>> read_simplex_list(const std::string& path) {
    std::ifstream in = open_in(path);
    std::vector<std::vector<std::int64_t>> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(strip_comment(line));
        std::vector<std::int64_t> ids;
        std::int64_t v;
        while (row >> v) {
            if (v < 0)
                throw DataError(path + ": negative node id " + std::to_string(v));
            ids.push_back(v);
        }
        if (!row.eof())
            throw DataError(path + ": malformed simplex line: " + line);
        if (!ids.empty())
            out.push_back(std::move(ids));
    }
    return out;
}

void write_simplex_list(const std::string& path, const SimplicialComplex& x) {
    std::ofstream out = open_out(path);
    for (NodeId i = 0; i < x.n0(); ++i)
        if (x.node_degree(i) == 0)
            out << x.original_id(i) << "\n";
    for (const Link& l : x.links())
        out << x.original_id(l.lo) << " " << x.original_id(l.hi) << "\n";
    for (const Triangle& t : x.triangles())
        out << x.original_id(t.a) << " " << x.original_id(t.b) << " " << x.original_id(t.c)
            << "\n";
}

namespace {

template <typename Mat, typename Fmt>
void write_coordinate_impl(const std::string& path, const Mat& m, Fmt fmt) {
    std::ofstream out = open_out(path);
    out << m.rows() << " " << m.cols() << " " << m.nonZeros() << "\n";
    for (int col = 0; col < m.outerSize(); ++col)
        for (typename Mat::InnerIterator it(m, col); it; ++it)
            out << it.row() << " " << it.col() << " " << fmt(it.value()) << "\n";
}

} // namespace

void write_coordinate_matrix(const std::string& path, const SpMatI& m) {
    write_coordinate_impl(path, m,
                          [](std::int64_t v) { return std::to_string(v); });
}

void write_coordinate_matrix(const std::string& path, const SpMatD& m) {
    write_coordinate_impl(path, m, [](double v) { return format_double(v); });
}

SpMatD read_coordinate_matrix(const std::string& path) {
    std::ifstream in = open_in(path);
    Eigen::Index rows, cols;
    std::size_t nnz;
    if (!(in >> rows >> cols >> nnz))
        throw DataError(path + ": missing coordinate header");
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
        Eigen::Index r, c;
        double v;
        if (!(in >> r >> c >> v))
            throw DataError(path + ": truncated coordinate entry");
        trips.emplace_back(r, c, v);
    }
    SpMatD m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

void write_node_map(const std::string& path, const SimplicialComplex& x) {
    std::ofstream out = open_out(path);
    out << "dense_id,original_id\n";
    for (NodeId i = 0; i < x.n0(); ++i)
        out << i << "," << x.original_id(i) << "\n";
}

void write_partition_csv(const std::string& path, const SimplicialComplex& x,
                         const Partition& p) {
    if (static_cast<int>(p.assignment.size()) != x.n1())
        throw DimensionMismatch("partition does not cover the complex links");
    std::ofstream out = open_out(path);
    out << "link_lo,link_hi,community\n";
    for (int k = 0; k < x.n1(); ++k)
        out << x.original_id(x.links()[k].lo) << "," << x.original_id(x.links()[k].hi) << ","
            << p.assignment[k] << "\n";
}

Partition read_partition_csv(const std::string& path, const SimplicialComplex& x) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || split_csv(line).size() != 3)
        throw DataError(path + ": missing partition header");
    Partition p;
    p.assignment.assign(x.n1(), -1);
    while (std::getline(in, line)) {
        auto fields = split_csv(line);
        if (fields.empty())
            continue;
        if (fields.size() != 3)
            throw DataError(path + ": malformed partition row: " + line);
        NodeId lo = x.dense_id(parse_int(fields[0], path));
        NodeId hi = x.dense_id(parse_int(fields[1], path));
        if (lo < 0 || hi < 0)
            throw DataError(path + ": unknown node in row: " + line);
        int k = x.find_link(lo, hi);
        if (k < 0)
            throw UnknownLink(path + ": unknown link in row: " + line);
        p.assignment[k] = static_cast<int>(parse_int(fields[2], path));
    }
    for (int c : p.assignment)
        if (c < 0)
            throw DataError(path + ": partition does not cover every link");
    return p;
}

void write_partition_json(const std::string& path, const Partition& p) {
    nlohmann::json j;
    j["method"] = p.method;
    j["t"] = p.t;
    j["seed"] = p.seed;
    j["score"] = p.score;
    j["n_communities"] = p.n_communities();
    if (p.condition_star >= 0)
        j["condition_star"] = (p.condition_star == 1);
    else
        j["condition_star"] = nullptr;
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

NodeMetadata read_metadata_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line))
        throw DataError(path + ": empty metadata file");
    NodeMetadata meta;
    while (std::getline(in, line)) {
        auto fields = split_csv(line);
        if (fields.empty())
            continue;
        if (fields.size() != 3)
            throw DataError(path + ": malformed metadata row: " + line);
        std::int64_t id = parse_int(fields[0], path);
        if (!fields[1].empty())
            meta.similarity_attr[id] = fields[1];
        if (!fields[2].empty())
            meta.overlap_attr[id] = parse_real(fields[2], path);
    }
    return meta;
}

void write_metadata_csv(const std::string& path, const NodeMetadata& meta) {
    std::ofstream out = open_out(path);
    out << "node_id,similarity_attr,overlap_attr\n";
    std::vector<std::int64_t> ids;
    for (const auto& [id, v] : meta.similarity_attr)
        ids.push_back(id);
    for (const auto& [id, v] : meta.overlap_attr)
        ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::int64_t id : ids) {
        out << id << ",";
        auto s = meta.similarity_attr.find(id);
        if (s != meta.similarity_attr.end())
            out << s->second;
        out << ",";
        auto o = meta.overlap_attr.find(id);
        if (o != meta.overlap_attr.end())
            out << format_double(o->second);
        out << "\n";
    }
}

void write_metrics_csv(const std::string& path, const std::vector<MetricsReport>& reports,
                       const std::vector<double>& q_hat) {
    if (!q_hat.empty() && q_hat.size() != reports.size())
        throw DimensionMismatch("q_hat column does not match the report rows");
    std::ofstream out = open_out(path);
    out << "network,method,t,score,q_hat,enrichment,enrichment_defined,overlap_quality,"
           "community_coverage,overlap_coverage,dropped_similarity,dropped_overlap\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const MetricsReport& r = reports[i];
        out << r.network << "," << r.method << "," << r.t << "," << format_double(r.score)
            << "," << (q_hat.empty() ? "" : format_double(q_hat[i])) << ","
            << format_double(r.enrichment) << "," << (r.enrichment_defined ? 1 : 0) << ","
            << format_double(r.overlap_quality) << "," << format_double(r.community_coverage)
            << "," << format_double(r.overlap_coverage) << "," << r.dropped_similarity << ","
            << r.dropped_overlap << "\n";
    }
}

std::vector<MetricsReport> read_metrics_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line))
        throw DataError(path + ": empty metrics file");
    std::vector<MetricsReport> out;
    while (std::getline(in, line)) {
        auto f = split_csv(line);
        if (f.empty())
            continue;
        if (f.size() != 12)
            throw DataError(path + ": malformed metrics row: " + line);
        MetricsReport r;
        r.network = f[0];
        r.method = f[1];
        r.t = static_cast<int>(parse_int(f[2], path));
        r.score = parse_real(f[3], path);
        r.enrichment = parse_real(f[5], path);
        r.enrichment_defined = f[6] == "1";
        r.overlap_quality = parse_real(f[7], path);
        r.community_coverage = parse_real(f[8], path);
        r.overlap_coverage = parse_real(f[9], path);
        r.dropped_similarity = static_cast<int>(parse_int(f[10], path));
        r.dropped_overlap = static_cast<int>(parse_int(f[11], path));
        out.push_back(std::move(r));
    }
    return out;
}

void write_composite_csv(const std::string& path, const std::vector<CompositeRow>& rows) {
    std::ofstream out = open_out(path);
    out << "method,enrichment,overlap_quality,community_coverage,overlap_coverage,composite,"
           "had_undefined\n";
    for (const CompositeRow& r : rows)
        out << r.method << "," << format_double(r.enrichment) << ","
            << format_double(r.overlap_quality) << "," << format_double(r.community_coverage)
            << "," << format_double(r.overlap_coverage) << "," << format_double(r.composite)
            << "," << (r.had_undefined ? 1 : 0) << "\n";
}

void write_long_csv(const std::string& path, const std::vector<MetricsReport>& reports) {
    std::ofstream out = open_out(path);
    out << "metric,t,method,value\n";
    for (const MetricsReport& r : reports) {
        if (r.enrichment_defined)
            out << "enrichment," << r.t << "," << r.method << ","
                << format_double(r.enrichment) << "\n";
        out << "overlap_quality," << r.t << "," << r.method << ","
            << format_double(r.overlap_quality) << "\n";
        out << "community_coverage," << r.t << "," << r.method << ","
            << format_double(r.community_coverage) << "\n";
        out << "overlap_coverage," << r.t << "," << r.method << ","
            << format_double(r.overlap_coverage) << "\n";
    }
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in = open_in(path);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string body = strip_comment(line);
        auto first = body.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ": expected key=value, got: " + line);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ": empty key in: " + line);
        out[key] = value;
    }
    return out;
}

} // namespace hodgelink::io
