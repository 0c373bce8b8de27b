class TaxTable {
 public:
  static double rate() {
    return 0.2;
  }
  static double taxFor(double amount) {
    double tax = amount * TaxTable::rate();
    tax = tax + 1.0;
    return tax;
  }
};

class Order {
 public:
  double total(double amount) {
    double tax = TaxTable::taxFor(amount);
    return amount + tax;
  }
};
