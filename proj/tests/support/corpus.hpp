#ifndef INDEXED_TESTS_CORPUS_HPP
#define INDEXED_TESTS_CORPUS_HPP

#include <string>
#include <vector>

namespace indexed::testing {

// Hand-written accepted documents: every value form, escapes, nesting,
// whitespace variants, duplicate keys and number edge cases.
inline const std::vector<std::string>& accepted_corpus() {
    static const std::vector<std::string> corpus = {
        R"({})",
        R"(  {}  )",
        "\t{\r\n}\n",
        R"({"a":1})",
        R"({"a":-1})",
        R"({"a":0})",
        R"({"a":-0})",
        R"({"a":1.5})",
        R"({"a":-0.125})",
        R"({"a":1e10})",
        R"({"a":1E-10})",
        R"({"a":2.5e+3})",
        R"({"a":123456789012345678901234567890})",
        R"({"a":1.7976931348623157e308})",
        R"({"a":5e-324})",
        R"({"a":1e-400})",
        R"({"a":0.1,"b":0.2,"c":0.30000000000000004})",
        R"({"t":true,"f":false,"n":null})",
        R"({"s":""})",
        R"({"s":"plain text"})",
        R"({"s":"quote \" backslash \\ slash \/"})",
        R"({"s":"\b\f\n\r\t"})",
        R"({"s":"\u0000\u001f\u007f"})",
        R"({"s":"é€"})",
        R"({"s":"😀"})",
        "{\"s\":\"raw utf8 \xc3\xa9 \xe2\x82\xac \xf0\x9f\x98\x80\"}",
        R"({"\n key \"":"v"})",
        R"({"":""})",
        R"({"a":[]})",
        R"({"a":[1,2,3]})",
        R"({"a":[1.5,null,{"x":false}]})",
        R"({"k":[1.5,null,{"x":false}]})",
        R"({"a":[[],[[]],[[[]]]]})",
        R"({"a":{"b":{"c":{"d":{}}}}})",
        R"({"a":[{"b":[{"c":[]}]}]})",
        R"({"a":{},"b":[],"c":"","d":0,"e":false,"f":null})",
        R"({"dup":1,"dup":2,"dup":3})",
        R"({"z":1,"a":2,"m":3})",
        R"({ "spaced" : [ 1 , 2 , { "x" : null } ] })",
        "{\n  \"pretty\": [\n    1,\n    2\n  ],\n  \"o\": {}\n}",
        R"({"mixed":["s",1,true,false,null,[],{}]})",
        R"({"deep":[[[[[[[[[[1]]]]]]]]]]})",
        R"({"numbers":[0,-0,1,-1,10,100,1e2,1E+2,0.5,-0.5]})",
        R"({"big":1e308,"small":2.2250738585072014e-308})",
        R"({"int_like":9007199254740993})",
        R"({"esc_only":"\\\\\\"})",
        R"({"slashes":"a/b\/c"})",
        R"({"ctrl":"\u0001\u0002\u0003"})",
        R"({"nested_map_in_array":[{"a":1},{"a":2},{"b":[{"c":{}}]}]})",
        R"({"unicode_key_é":"value"})",
    };
    return corpus;
}

/// One canonical text per non-object top-level value form.
inline const std::vector<std::string>& non_object_roots() {
    static const std::vector<std::string> roots = {R"([1,2])", R"("text")", "42", "true", "false",
                                                   "null"};
    return roots;
}

// Texts the parser must reject, other than non-object roots.
inline const std::vector<std::string>& rejected_corpus() {
    static const std::vector<std::string> corpus = {
        "",
        "   ",
        "{",
        "}",
        R"({"a"})",
        R"({"a":})",
        R"({"a":1,})",
        R"({"a":1 "b":2})",
        R"({a:1})",
        R"({'a':1})",
        R"({"a":[1,2,]})",
        R"({"a":[1 2]})",
        R"({"a":01})",
        R"({"a":1.})",
        R"({"a":.5})",
        R"({"a":-})",
        R"({"a":1e})",
        R"({"a":+1})",
        R"({"a":NaN})",
        R"({"a":Infinity})",
        R"({"a":tru})",
        R"({"a":nul})",
        R"({"a":"unterminated})",
        "{\"a\":\"tab\there\"}",
        R"({"a":"\x"})",
        R"({"a":"\u12"})",
        R"({"a":"\ud800"})",
        R"({"a":"\udc00"})",
        R"({"a":"\ud800A"})",
        "{\"a\":\"\xff\"}",
        "{\"a\":\"\xc0\xaf\"}",
        "{\"a\":\"\xed\xa0\x80\"}",
        "{\"a\":\"\xe2\x82\"}",
        R"({"a":1e400})",
        R"({"a":-1e400})",
        R"({} {})",
        R"({}x)",
        R"({} // comment)",
        R"(/* c */ {})",
        "\xef\xbb\xbf{}",
        R"({"a":1}])",
    };
    return corpus;
}

}  // namespace indexed::testing

#endif  // INDEXED_TESTS_CORPUS_HPP
