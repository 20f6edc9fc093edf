/*
 * Copyright 2026 The shaclform Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SHACLFORM_SRC_NET_HTTP_HPP
#define SHACLFORM_SRC_NET_HTTP_HPP

#include <chrono>
#include <string>

namespace shaclform::net {

struct HttpResponse {
    int status = 0;
    std::string body;
    std::string location;
    std::string error;  // transport failure; status is 0 when set

    bool ok() const { return error.empty(); }
};

/// One HTTP(S) exchange without following redirects.
HttpResponse request(const std::string& method, const std::string& url, std::chrono::milliseconds timeout,
                     const std::string& body = {}, const std::string& content_type = {});

}  // namespace shaclform::net

#endif  // SHACLFORM_SRC_NET_HTTP_HPP
