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

#include "net/http.hpp"

#include <regex>

#include <httplib.h>

namespace shaclform::net {

HttpResponse request(const std::string& method, const std::string& url, std::chrono::milliseconds timeout,
                     const std::string& body, const std::string& content_type) {
    static const std::regex kUrl(R"(^(https?://[^/?#]+)([^#]*)(#.*)?$)", std::regex::icase);
    std::smatch m;
    if (!std::regex_match(url, m, kUrl)) return HttpResponse{0, {}, {}, "unsupported URL " + url};
    std::string origin = m[1];
    std::string target = m[2].length() > 0 ? std::string(m[2]) : std::string("/");

    HttpResponse out;
    try {
        httplib::Client client(origin);
        client.set_follow_location(false);
        client.set_connection_timeout(timeout);
        client.set_read_timeout(timeout);
        client.set_write_timeout(timeout);

        httplib::Result result{nullptr, httplib::Error::Unknown};
        if (method == "HEAD") {
            result = client.Head(target);
        } else if (method == "GET") {
            result = client.Get(target);
        } else if (method == "POST") {
            result = client.Post(target, body, content_type);
        } else {
            return HttpResponse{0, {}, {}, "unsupported method " + method};
        }
        if (!result) return HttpResponse{0, {}, {}, httplib::to_string(result.error())};
        out.status = result->status;
        out.body = result->body;
        out.location = result->get_header_value("Location");
    } catch (const std::exception& e) {
        return HttpResponse{0, {}, {}, e.what()};
    }
    return out;
}

}  // namespace shaclform::net
