package assoc;

/** Doc A. */
public class A {}

/** Doc B. */
@Deprecated
public final class B {}

/** Not for E: an import intervenes. */
import java.util.List;
public class E {}

/** First doc. */
/** Second doc wins. */
class F {}

/** Doc G. */
// reviewer note
class G {}

/** Doc H. */
/* plain note */
class H {}

class I {
    public String s = "/** not a doc */ class Fake {}";
    public char c = '{';
    public String t = """
        class AlsoFake {}
        """;
    public Class<?> k = String.class;
}

/** Doc J. */
@SuppressWarnings({"unchecked", "rawtypes"})
public abstract class J {}

/** Doc K. */
public @interface K {}

/** Doc L. */
sealed interface L permits M {}

/** Doc M. */
enum M { ONE, TWO }

/** Doc N. */
public class N {
    /** Consumed by the field, not by Inner. */
    public int counter = 0;

    static class Inner {}
}

/** Doc P. */
class P<T extends Comparable<T>, U> {
    public Map<String, List<T>> index = new HashMap<>();
    public <V> V pick(V v) { return v; }
}

/** Doc Q. */
class Q {
    public Q() {}
    public Q(int x) {}
    public void q1() {}
    private void q2() {}
    void q3() {}
    public static final int LIMIT = 10;
}

class R {
    public Runnable task = new Runnable() { public void run() {} };
    public int after = 1;
}
