#include <string>

class Animal {
 public:
  std::string name;
  std::string describe() {
    std::string text = "animal: ";
    text += name;
    return text;
  }
};

class Dog : public Animal {
 public:
  int legs() {
    return 4;
  }
};
