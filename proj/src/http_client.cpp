// Copyright 2026 The sebikg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "http_client.hpp"

#include <httplib.h>

#include "sebikg/error.hpp"

namespace sebikg::http {

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

SplitUrl Split(const std::string& url) {
  const size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorKind::kTransport, "malformed URL: " + url);
  }
  const size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

httplib::Headers ToHeaders(const Headers& headers) {
  httplib::Headers out;
  for (const auto& [k, v] : headers) out.emplace(k, v);
  return out;
}

httplib::Client MakeClient(const std::string& origin, int timeout_seconds) {
  httplib::Client client(origin);
  client.set_connection_timeout(timeout_seconds, 0);
  client.set_read_timeout(timeout_seconds, 0);
  client.set_write_timeout(timeout_seconds, 0);
  return client;
}

}  // namespace

Response Post(const std::string& url, const std::string& body, const std::string& content_type,
              const Headers& headers, int timeout_seconds) {
  const SplitUrl parts = Split(url);
  auto client = MakeClient(parts.origin, timeout_seconds);
  auto res = client.Post(parts.path, ToHeaders(headers), body, content_type);
  if (!res) {
    throw Error(ErrorKind::kTransport,
                "POST " + url + " failed: " + httplib::to_string(res.error()));
  }
  return {res->status, res->body};
}

Response Get(const std::string& url, const Params& params, const Headers& headers,
             int timeout_seconds) {
  const SplitUrl parts = Split(url);
  auto client = MakeClient(parts.origin, timeout_seconds);
  httplib::Params p;
  for (const auto& [k, v] : params) p.emplace(k, v);
  auto res = client.Get(parts.path, p, ToHeaders(headers));
  if (!res) {
    throw Error(ErrorKind::kTransport,
                "GET " + url + " failed: " + httplib::to_string(res.error()));
  }
  return {res->status, res->body};
}

}  // namespace sebikg::http
