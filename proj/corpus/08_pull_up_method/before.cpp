#include <string>

class Animal {
 public:
  std::string name;
};

class Dog : public Animal {
 public:
  std::string describe() {
    std::string text = "animal: ";
    text += name;
    return text;
  }
  int legs() {
    return 4;
  }
};
