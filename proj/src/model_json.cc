// Copyright 2026 The refminer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "refminer/model_json.h"

#include <set>

#include "json.hpp"

namespace refminer {
namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

ordered_json ToJson(const SourceLocation &loc) {
  ordered_json j;
  j["startLine"] = loc.start_line;
  j["startColumn"] = loc.start_column;
  j["endLine"] = loc.end_line;
  j["endColumn"] = loc.end_column;
  return j;
}

ordered_json ToJson(const TypeRef &type) {
  ordered_json j;
  j["baseName"] = type.base_name;
  ordered_json args = ordered_json::array();
  for (const TypeRef &arg : type.template_args) args.push_back(ToJson(arg));
  j["templateArgs"] = std::move(args);
  j["isConst"] = type.is_const;
  j["pointerDepth"] = type.pointer_depth;
  j["isReference"] = type.is_reference;
  return j;
}

ordered_json ToJson(const ModifierSet &modifiers) {
  ordered_json j = ordered_json::array();
  for (Modifier m : modifiers.ToVector()) j.push_back(ToString(m));
  return j;
}

ordered_json ToJson(const Statement &stmt) {
  ordered_json j;
  j["kind"] = ToString(stmt.kind);
  j["text"] = stmt.text;
  ordered_json children = ordered_json::array();
  for (const Statement &child : stmt.children) children.push_back(ToJson(child));
  j["children"] = std::move(children);
  ordered_json vars = ordered_json::array();
  for (const VariableDecl &v : stmt.declared_variables) {
    ordered_json var;
    var["name"] = v.name;
    var["type"] = ToJson(v.type);
    vars.push_back(std::move(var));
  }
  j["declaredVariables"] = std::move(vars);
  ordered_json refs = ordered_json::array();
  for (const std::string &id : stmt.referenced_identifiers) refs.push_back(id);
  j["referencedIdentifiers"] = std::move(refs);
  j["location"] = ToJson(stmt.location);
  return j;
}

ordered_json ToJson(const Parameter &param) {
  ordered_json j;
  j["name"] = param.name;
  j["type"] = ToJson(param.type);
  j["position"] = param.position;
  j["defaultValue"] = param.default_value ? ordered_json(*param.default_value)
                                          : ordered_json(nullptr);
  j["location"] = ToJson(param.location);
  return j;
}

ordered_json ToJson(const AttributeDecl &attr) {
  ordered_json j;
  j["name"] = attr.name;
  j["type"] = ToJson(attr.type);
  j["modifiers"] = ToJson(attr.modifiers);
  j["visibility"] = ToString(attr.visibility);
  j["initializer"] = attr.initializer ? ordered_json(*attr.initializer)
                                      : ordered_json(nullptr);
  j["location"] = ToJson(attr.location);
  return j;
}

ordered_json ToJson(const OperationDecl &op) {
  ordered_json j;
  j["name"] = op.name;
  ordered_json params = ordered_json::array();
  for (const Parameter &p : op.parameters) params.push_back(ToJson(p));
  j["parameters"] = std::move(params);
  j["returnType"] =
      op.return_type ? ToJson(*op.return_type) : ordered_json(nullptr);
  j["modifiers"] = ToJson(op.modifiers);
  j["visibility"] = ToString(op.visibility);
  j["isConstructor"] = op.is_constructor;
  j["body"] = op.body ? ToJson(*op.body) : ordered_json(nullptr);
  j["location"] = ToJson(op.location);
  return j;
}

ordered_json ToJson(const ClassDecl &cls) {
  ordered_json j;
  j["simpleName"] = cls.simple_name;
  j["package"] = cls.package;
  j["kind"] = ToString(cls.kind);
  j["templateParams"] = cls.template_params;
  ordered_json attrs = ordered_json::array();
  for (const AttributeDecl &a : cls.attributes) attrs.push_back(ToJson(a));
  j["attributes"] = std::move(attrs);
  ordered_json ops = ordered_json::array();
  for (const OperationDecl &o : cls.operations) ops.push_back(ToJson(o));
  j["operations"] = std::move(ops);
  j["location"] = ToJson(cls.location);
  return j;
}

// Typed accessors that report failures with the JSON pointer of the value.
class Reader {
 public:
  explicit Reader(std::string file_id) : file_id_(std::move(file_id)) {}

  const json &Field(const json &obj, const std::string &path,
                    const char *key) const {
    if (!obj.is_object()) throw ModelFormatError(path, "expected object");
    auto it = obj.find(key);
    if (it == obj.end()) {
      throw ModelFormatError(path + "/" + key, "missing field");
    }
    return *it;
  }

  std::string String(const json &obj, const std::string &path,
                     const char *key) const {
    const json &v = Field(obj, path, key);
    if (!v.is_string()) {
      throw ModelFormatError(path + "/" + key, "expected string");
    }
    return v.get<std::string>();
  }

  std::optional<std::string> OptString(const json &obj,
                                       const std::string &path,
                                       const char *key) const {
    const json &v = Field(obj, path, key);
    if (v.is_null()) return std::nullopt;
    if (!v.is_string()) {
      throw ModelFormatError(path + "/" + key, "expected string or null");
    }
    return v.get<std::string>();
  }

  int Int(const json &obj, const std::string &path, const char *key) const {
    const json &v = Field(obj, path, key);
    if (!v.is_number_integer()) {
      throw ModelFormatError(path + "/" + key, "expected integer");
    }
    return v.get<int>();
  }

  bool Bool(const json &obj, const std::string &path, const char *key) const {
    const json &v = Field(obj, path, key);
    if (!v.is_boolean()) {
      throw ModelFormatError(path + "/" + key, "expected boolean");
    }
    return v.get<bool>();
  }

  const json &Array(const json &obj, const std::string &path,
                    const char *key) const {
    const json &v = Field(obj, path, key);
    if (!v.is_array()) {
      throw ModelFormatError(path + "/" + key, "expected array");
    }
    return v;
  }

  SourceLocation Location(const json &obj, const std::string &path) const {
    const std::string p = path + "/location";
    const json &j = Field(obj, path, "location");
    SourceLocation loc;
    loc.file_id = file_id_;
    loc.start_line = Int(j, p, "startLine");
    loc.start_column = Int(j, p, "startColumn");
    loc.end_line = Int(j, p, "endLine");
    loc.end_column = Int(j, p, "endColumn");
    if (!loc.IsOrdered()) throw ModelFormatError(p, "start after end");
    return loc;
  }

  TypeRef Type(const json &j, const std::string &path) const {
    TypeRef type;
    type.base_name = String(j, path, "baseName");
    if (type.base_name.empty()) {
      throw ModelFormatError(path + "/baseName", "empty type name");
    }
    const json &args = Array(j, path, "templateArgs");
    for (size_t i = 0; i < args.size(); ++i) {
      type.template_args.push_back(
          Type(args[i], path + "/templateArgs/" + std::to_string(i)));
    }
    type.is_const = Bool(j, path, "isConst");
    type.pointer_depth = Int(j, path, "pointerDepth");
    if (type.pointer_depth < 0) {
      throw ModelFormatError(path + "/pointerDepth", "negative");
    }
    type.is_reference = Bool(j, path, "isReference");
    return type;
  }

  ModifierSet Modifiers(const json &obj, const std::string &path) const {
    ModifierSet set;
    const json &arr = Array(obj, path, "modifiers");
    for (size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + "/modifiers/" + std::to_string(i);
      if (!arr[i].is_string()) throw ModelFormatError(p, "expected string");
      auto m = ModifierFromString(arr[i].get<std::string>());
      if (!m) throw ModelFormatError(p, "unknown modifier");
      if (set.Contains(*m)) throw ModelFormatError(p, "duplicate modifier");
      set.Insert(*m);
    }
    return set;
  }

  Visibility VisibilityOf(const json &obj, const std::string &path) const {
    auto v = VisibilityFromString(String(obj, path, "visibility"));
    if (!v) throw ModelFormatError(path + "/visibility", "unknown visibility");
    return *v;
  }

  Statement StatementOf(const json &j, const std::string &path) const {
    Statement stmt;
    auto kind = StatementKindFromString(String(j, path, "kind"));
    if (!kind) throw ModelFormatError(path + "/kind", "unknown statement kind");
    stmt.kind = *kind;
    stmt.text = String(j, path, "text");
    const json &children = Array(j, path, "children");
    for (size_t i = 0; i < children.size(); ++i) {
      stmt.children.push_back(
          StatementOf(children[i], path + "/children/" + std::to_string(i)));
    }
    if (stmt.IsLeaf() && !stmt.children.empty()) {
      throw ModelFormatError(path + "/children", "leaf statement with children");
    }
    const json &vars = Array(j, path, "declaredVariables");
    for (size_t i = 0; i < vars.size(); ++i) {
      const std::string p = path + "/declaredVariables/" + std::to_string(i);
      VariableDecl v;
      v.name = String(vars[i], p, "name");
      v.type = Type(Field(vars[i], p, "type"), p + "/type");
      stmt.declared_variables.push_back(std::move(v));
    }
    const json &refs = Array(j, path, "referencedIdentifiers");
    for (size_t i = 0; i < refs.size(); ++i) {
      if (!refs[i].is_string()) {
        throw ModelFormatError(
            path + "/referencedIdentifiers/" + std::to_string(i),
            "expected string");
      }
      stmt.referenced_identifiers.insert(refs[i].get<std::string>());
    }
    stmt.location = Location(j, path);
    return stmt;
  }

  Parameter ParameterOf(const json &j, const std::string &path) const {
    Parameter p;
    p.name = String(j, path, "name");
    p.type = Type(Field(j, path, "type"), path + "/type");
    p.position = Int(j, path, "position");
    p.default_value = OptString(j, path, "defaultValue");
    p.location = Location(j, path);
    return p;
  }

  AttributeDecl AttributeOf(const json &j, const std::string &path) const {
    AttributeDecl a;
    a.name = String(j, path, "name");
    a.type = Type(Field(j, path, "type"), path + "/type");
    a.modifiers = Modifiers(j, path);
    a.visibility = VisibilityOf(j, path);
    a.initializer = OptString(j, path, "initializer");
    a.location = Location(j, path);
    return a;
  }

  OperationDecl OperationOf(const json &j, const std::string &path) const {
    OperationDecl op;
    op.name = String(j, path, "name");
    const json &params = Array(j, path, "parameters");
    for (size_t i = 0; i < params.size(); ++i) {
      const std::string p = path + "/parameters/" + std::to_string(i);
      op.parameters.push_back(ParameterOf(params[i], p));
      if (op.parameters.back().position != static_cast<int>(i)) {
        throw ModelFormatError(p + "/position", "positions must be contiguous");
      }
    }
    const json &ret = Field(j, path, "returnType");
    if (!ret.is_null()) op.return_type = Type(ret, path + "/returnType");
    op.modifiers = Modifiers(j, path);
    op.visibility = VisibilityOf(j, path);
    op.is_constructor = Bool(j, path, "isConstructor");
    if (op.is_constructor && op.return_type) {
      throw ModelFormatError(path + "/returnType",
                             "constructor with a return type");
    }
    const json &body = Field(j, path, "body");
    if (!body.is_null()) {
      op.body = StatementOf(body, path + "/body");
      if (op.body->kind != StatementKind::kBlock) {
        throw ModelFormatError(path + "/body/kind", "body must be a block");
      }
    }
    op.location = Location(j, path);
    return op;
  }

  ClassDecl ClassOf(const json &j, const std::string &path) const {
    ClassDecl c;
    c.simple_name = String(j, path, "simpleName");
    c.package = String(j, path, "package");
    auto kind = ClassKindFromString(String(j, path, "kind"));
    if (!kind) throw ModelFormatError(path + "/kind", "unknown class kind");
    c.kind = *kind;
    const json &tparams = Array(j, path, "templateParams");
    for (size_t i = 0; i < tparams.size(); ++i) {
      if (!tparams[i].is_string()) {
        throw ModelFormatError(path + "/templateParams/" + std::to_string(i),
                               "expected string");
      }
      c.template_params.push_back(tparams[i].get<std::string>());
    }
    const json &attrs = Array(j, path, "attributes");
    std::set<std::string> names;
    for (size_t i = 0; i < attrs.size(); ++i) {
      const std::string p = path + "/attributes/" + std::to_string(i);
      c.attributes.push_back(AttributeOf(attrs[i], p));
      if (!names.insert(c.attributes.back().name).second) {
        throw ModelFormatError(p + "/name", "duplicate attribute name");
      }
    }
    const json &ops = Array(j, path, "operations");
    for (size_t i = 0; i < ops.size(); ++i) {
      c.operations.push_back(
          OperationOf(ops[i], path + "/operations/" + std::to_string(i)));
    }
    c.location = Location(j, path);
    return c;
  }

 private:
  std::string file_id_;
};

}  // namespace

std::string SerializeModel(const CodeModel &model) {
  ordered_json doc;
  doc["fileId"] = model.file_id;
  ordered_json classes = ordered_json::array();
  for (const ClassDecl &c : model.classes) classes.push_back(ToJson(c));
  doc["classes"] = std::move(classes);
  ordered_json gens = ordered_json::array();
  for (const Generalization &g : model.generalizations) {
    ordered_json e;
    e["child"] = g.child;
    e["parent"] = g.parent;
    gens.push_back(std::move(e));
  }
  doc["generalizations"] = std::move(gens);
  return doc.dump(2) + "\n";
}

CodeModel DeserializeModel(std::string_view data) {
  json doc;
  try {
    doc = json::parse(data);
  } catch (const json::parse_error &e) {
    throw ModelFormatError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelFormatError("", "expected object");

  CodeModel model;
  {
    auto it = doc.find("fileId");
    if (it == doc.end() || !it->is_string()) {
      throw ModelFormatError("/fileId", "expected string");
    }
    model.file_id = it->get<std::string>();
  }
  Reader reader(model.file_id);
  const json &classes = reader.Array(doc, "", "classes");
  std::set<std::string> qualified;
  for (size_t i = 0; i < classes.size(); ++i) {
    const std::string p = "/classes/" + std::to_string(i);
    model.classes.push_back(reader.ClassOf(classes[i], p));
    if (!qualified.insert(model.classes.back().QualifiedName()).second) {
      throw ModelFormatError(p, "duplicate qualified class name '" +
                                    model.classes.back().QualifiedName() + "'");
    }
  }
  const json &gens = reader.Array(doc, "", "generalizations");
  for (size_t i = 0; i < gens.size(); ++i) {
    const std::string p = "/generalizations/" + std::to_string(i);
    Generalization g{reader.String(gens[i], p, "child"),
                     reader.String(gens[i], p, "parent")};
    if (!qualified.contains(g.child)) {
      throw ModelFormatError(p + "/child", "unknown class '" + g.child + "'");
    }
    model.generalizations.push_back(std::move(g));
  }
  return model;
}

}  // namespace refminer
