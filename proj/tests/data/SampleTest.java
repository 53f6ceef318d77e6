package demo;

import static org.junit.Assert.*;
import static org.hamcrest.CoreMatchers.*;

public class SampleTest {

    private Counter counter = new Counter();

    @Test
    public void startsEmpty() {
        assertNotNull(counter);
        assertEquals(0, counter.getValue());
    }

    @Test
    public void increments() {
        counter.increment();
        assertThat(counter.getValue(), is(1));
        assertThat("label must match", counter.getLabel(), allOf(startsWith("c"), containsString("ount")));
    }
}
