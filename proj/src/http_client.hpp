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


#ifndef SEBIKG_SRC_HTTP_CLIENT_HPP_
#define SEBIKG_SRC_HTTP_CLIENT_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sebikg::http {

struct Response {
  int status = 0;
  std::string body;
};

using Headers = std::vector<std::pair<std::string, std::string>>;
using Params = std::vector<std::pair<std::string, std::string>>;

// Both calls throw Error{kTransport} when no response arrives; HTTP error
// statuses are returned to the caller.
Response Post(const std::string& url, const std::string& body, const std::string& content_type,
              const Headers& headers, int timeout_seconds);
Response Get(const std::string& url, const Params& params, const Headers& headers,
             int timeout_seconds);

}  // namespace sebikg::http

#endif  // SEBIKG_SRC_HTTP_CLIENT_HPP_
