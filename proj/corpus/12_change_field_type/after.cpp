class Buffer {
  long capacity = 16;
 public:
  int size() {
    return capacity;
  }
};
