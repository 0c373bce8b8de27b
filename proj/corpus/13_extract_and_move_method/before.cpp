class TaxTable {
 public:
  static double rate() {
    return 0.2;
  }
};

class Order {
 public:
  double total(double amount) {
    double tax = amount * TaxTable::rate();
    tax = tax + 1.0;
    return amount + tax;
  }
};
